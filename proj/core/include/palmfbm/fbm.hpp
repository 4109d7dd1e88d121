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
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "palmfbm/fgn.hpp"
#include "palmfbm/hurst.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {

namespace detail {
class DenseFbmFactor;
}

/// How the two half-lines of a lattice path are tied together at B_0 = 0.
enum class TwoSidedMode {
  /// One fGn stream of length 2N summed outward from its midpoint. Exact
  /// two-sided law, O(N log N). Default.
  kRebased,
  /// Independent one-sided fBm branches for n > 0 and n < 0. Correct
  /// marginals on each half-line, but Cov(B_{-s}, B_t) = 0.
  kIndependentBranches,
  /// Dense Cholesky factorization over the whole window (desk scale only).
  kDense,
};

std::string_view to_string(TwoSidedMode mode) noexcept;
std::optional<TwoSidedMode> parse_two_sided_mode(std::string_view text) noexcept;

/// Point count above which the dense sampler refuses to factorize.
inline constexpr std::size_t kDenseSamplerLimit = 4096;

/// fBm values B_n on the integer window [-N, N]; B_0 is exactly zero.
struct FbmPath {
  std::int64_t half_width = 0;
  std::vector<double> values;  // values[n + half_width] = B_n
  double hurst = 0.5;
  StreamKey key;
  TwoSidedMode mode = TwoSidedMode::kRebased;

  double at(std::int64_t n) const { return values[static_cast<std::size_t>(n + half_width)]; }
  std::size_t size() const noexcept { return values.size(); }
};

/// Cov(B_s, B_t) = (|s|^{2h} + |t|^{2h} - |s-t|^{2h}) / 2.
double fbm_covariance(HurstIndex h, double s, double t);

/// Reusable lattice path sampler for fixed (h, N, mode).
class FbmLatticeSampler {
 public:
  FbmLatticeSampler(HurstIndex h, std::int64_t half_width,
                    TwoSidedMode mode = TwoSidedMode::kRebased);

  HurstIndex hurst() const noexcept { return h_; }
  std::int64_t half_width() const noexcept { return half_width_; }
  TwoSidedMode mode() const noexcept { return mode_; }

  /// Two independent paths. In rebased mode both come from a single FFT.
  std::pair<FbmPath, FbmPath> sample_pair(StreamKey key) const;
  /// First member of sample_pair(key).
  FbmPath sample(StreamKey key) const;

 private:
  HurstIndex h_;
  std::int64_t half_width_;
  TwoSidedMode mode_;
  std::optional<CirculantFgnSampler> fgn_;
  std::shared_ptr<const detail::DenseFbmFactor> dense_;
};

FbmPath sample_fbm_lattice(HurstIndex h, std::int64_t half_width, StreamKey key,
                           TwoSidedMode mode = TwoSidedMode::kRebased);

/// Exact fBm at arbitrary distinct sorted points containing 0, by Cholesky
/// factorization of the covariance restricted to the nonzero points.
///
/// Cost is O(n^3) time and O(n^2) memory; limited to kDenseSamplerLimit
/// points. If the plain factorization fails a diagonal jitter of
/// 1e-12 * trace / n is added once; FactorizationFailure if that fails too.
std::vector<double> sample_fbm_points(HurstIndex h, std::span<const double> points, StreamKey key);

}  // namespace palmfbm
