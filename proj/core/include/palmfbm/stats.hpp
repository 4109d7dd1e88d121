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

/// Number of points x with |x| <= r. Requires r <= extent/2 (WindowTooSmall).
std::size_t count_in_ball(const PointConfiguration& config, double r);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

enum class ScanMode { kPalm, kStationarized };

std::string_view to_string(ScanMode mode) noexcept;
std::optional<ScanMode> parse_scan_mode(std::string_view text) noexcept;

struct ScanParameters {
  double hurst = 0.25;
  std::int64_t half_width = 1 << 15;
  std::vector<double> radii;
  std::size_t realizations = 2000;
  ScanMode mode = ScanMode::kStationarized;
  TwoSidedMode fbm_mode = TwoSidedMode::kRebased;
  /// dePalmization half-width; 0 selects N/4.
  double shift_halfwidth = 0.0;
  std::size_t bootstrap_resamples = 200;
  unsigned threads = 1;
};

/// Default radius grid: 24 log-spaced radii in [16, N/16].
std::vector<double> default_radii(std::int64_t half_width);

/// Raw per-realization counts; row i holds the counts of realization i at
/// every radius.
struct CountEnsemble {
  std::vector<double> radii;
  std::size_t realizations = 0;
  std::vector<std::uint64_t> counts;  // realizations x radii, row major

  std::uint64_t at(std::size_t realization, std::size_t radius) const {
    return counts[realization * radii.size() + radius];
  }
};

struct RadialVarianceTable {
  std::vector<double> radii;
  std::vector<double> mean_count;
  std::vector<double> var_count;
  std::vector<double> var_stderr;
  std::size_t realizations = 0;
  // provenance
  double hurst = 0.0;
  std::int64_t half_width = 0;
  std::uint64_t seed = 0;
  ScanMode mode = ScanMode::kStationarized;
};

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<double> residuals;
  std::size_t n_points = 0;
};

/// Counts for a fresh configuration per realization. Identical output for
/// any thread count: realization i always draws from the same streams.
CountEnsemble sample_count_ensemble(const ScanParameters& params, StreamKey key);

/// Per-radius sample mean and unbiased variance; var_stderr is the
/// bootstrap standard deviation of the variance over `resamples`
/// resamplings of realizations (drawn from `bootstrap_key`).
RadialVarianceTable summarize_counts(const CountEnsemble& ensemble, std::size_t resamples,
                                     StreamKey bootstrap_key);

/// Full Monte Carlo number-variance scan. DegenerateEnsemble if M < 2;
/// InvalidParameter if a radius exceeds N/2.
RadialVarianceTable number_variance_scan(const ScanParameters& params, StreamKey key);

/// Ordinary least squares of log(var_count) on log(r).
RegressionFit loglog_regress(const RadialVarianceTable& table);

/// Weighted variant: weights 1 / (var_stderr / var_count)^2, the delta-method
/// variance of log(var_count).
RegressionFit loglog_regress_weighted(const RadialVarianceTable& table);

/// Least squares y = intercept + slope * x with optional weights.
RegressionFit linear_fit(std::span<const double> x, std::span<const double> y,
                         std::span<const double> weights = {});

struct SweepEntry {
  double hurst = 0.0;
  double slope = 0.0;
  double slope_stderr = 0.0;
  RadialVarianceTable table;
};

/// One scan per Hurst index (scan i uses key.child(i)); slope standard
/// errors are bootstrap standard deviations of the refitted slope.
std::vector<SweepEntry> exponent_sweep(std::span<const double> hurst_values,
                                       const ScanParameters& base, StreamKey key);

}  // namespace palmfbm
