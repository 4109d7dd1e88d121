// Copyright 2026 The palmfbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "palmfbm/fbm.hpp"
#include "palmfbm/hurst.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {

/// Default cap on the number of lattice-sum terms.
inline constexpr std::int64_t kMaxSumTerms = 100'000'000;

struct LatticeSum {
  double value = 0.0;
  std::int64_t terms = 0;  // N: the sum runs over |n| <= N
};

/// Structure factor of the fBm-perturbed lattice,
///   s(t) = 1 + 2 sum_{n>=1} exp(-t^2 n^{2h} / 2) cos(n t),
/// truncated at the smallest N whose integral tail bound
///   2 int_N^inf exp(-t^2 x^{2h} / 2) dx
/// is below `tol`. The sum is even in t; t must be nonzero.
/// TruncationTooLarge if N would exceed `max_terms`.
LatticeSum structure_factor_sum(HurstIndex h, double t, double tol = 1e-12,
                                std::int64_t max_terms = kMaxSumTerms);

/// Truncation index used by structure_factor_sum.
std::int64_t lattice_sum_cutoff(HurstIndex h, double t, double tol,
                                std::int64_t max_terms = kMaxSumTerms);

/// The truncated sum with a caller-chosen N (no tail control).
double structure_factor_partial_sum(HurstIndex h, double t, std::int64_t terms);

/// Closed form at h = 1/2: 1 + 2 Re(q / (1 - q)) with q = exp(i t - t^2/2).
double brownian_structure_factor(double t);

/// Continuum approximation s_bar(t) = 2 int_0^inf exp(-t^2 x^{2h} / 2) cos(t x) dx,
/// computed to absolute accuracy `tol`. QuadratureFailure on non-convergence.
double continuum_structure_factor(HurstIndex h, double t, double tol = 1e-9);

/// alpha_h = 2h Gamma(2h) sin(pi h), the small-t constant in s(t) ~ alpha_h |t|^{1-2h}.
double asymptotic_constant(HurstIndex h);

/// alpha_h |t|^{1-2h}.
double asymptotic_structure_factor(HurstIndex h, double t);

enum class SpectrumMethod { kSum, kContinuum, kAsymptotic, kEmpirical };

std::string_view to_string(SpectrumMethod method) noexcept;
std::optional<SpectrumMethod> parse_spectrum_method(std::string_view text) noexcept;

/// s(t) on a grid. `trunc` holds, per t: the number of lattice terms (sum),
/// the quadrature tolerance (continuum), 0 (asymptotic), or the Monte Carlo
/// standard error (empirical).
struct StructureFactorCurve {
  std::vector<double> t;
  std::vector<double> s;
  std::vector<double> trunc;
  SpectrumMethod method = SpectrumMethod::kSum;
  std::optional<double> hurst;
  std::optional<std::int64_t> half_width;
  std::optional<std::size_t> realizations;
  std::optional<double> window_length;
  std::optional<std::uint64_t> seed;
};

/// Deterministic methods (sum, continuum, asymptotic) on a t grid.
StructureFactorCurve evaluate_structure_factor(HurstIndex h, SpectrumMethod method,
                                               std::span<const double> t, double tol);

/// Dual-grid frequencies 2 pi k / L that fall inside [tmin, tmax], k >= 1.
std::vector<double> dual_grid(double window_length, double tmin, double tmax);

/// True when t = 2 pi k / L for an integer k >= 1 (relative tolerance 1e-9).
bool on_dual_grid(double t, double window_length) noexcept;

struct EmpiricalOptions {
  double window_length = 0.0;  // L; points in [-L/2, L/2) are used
  bool allow_off_grid = false;
  unsigned threads = 1;
};

/// Scattering-intensity estimate averaged over configurations:
///   s_hat(t) = mean_c |sum_{x in c, -L/2 <= x < L/2} exp(-i t x)|^2 / n_c.
/// GridMismatch if some t is off the dual grid and allow_off_grid is unset.
StructureFactorCurve empirical_structure_factor(std::span<const PointConfiguration> configs,
                                                std::span<const double> t,
                                                const EmpiricalOptions& options);

/// Same estimator over M freshly sampled perturbed Palm lattices with
/// half-width N (realization layout as in the variance scan), without
/// keeping the configurations in memory.
StructureFactorCurve empirical_structure_factor_lattice(HurstIndex h, std::int64_t half_width,
                                                        std::size_t realizations, StreamKey key,
                                                        std::span<const double> t,
                                                        const EmpiricalOptions& options);

struct GapRow {
  double t = 0.0;
  double sum = 0.0;
  double continuum = 0.0;
  double gap = 0.0;  // sum - continuum
  std::int64_t terms = 0;
};

struct GapReport {
  std::vector<GapRow> rows;
  double max_gap_over_t2 = 0.0;
  double min_gap = 0.0;
  double max_gap = 0.0;
  /// h < 1/2: gap >= -tol everywhere (the gap/t^2 constant is reported, not
  /// asserted). h > 1/2: 0 <= gap <= 6 up to tol. h = 1/2: gap >= -tol.
  bool within_bound = false;
};

/// s_sum - s_continuum tabulated on a t grid (each t in (0, pi)).
GapReport approximation_gap(HurstIndex h, std::span<const double> t, double tol = 1e-10);

}  // namespace palmfbm
