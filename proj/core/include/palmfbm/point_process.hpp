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
#include <string>
#include <string_view>
#include <vector>

#include "palmfbm/fbm.hpp"
#include "palmfbm/hurst.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {

enum class ConfigKind { kPalm, kStationarized };

std::string_view to_string(ConfigKind kind) noexcept;

/// Provenance of a configuration.
struct ConfigMeta {
  std::optional<double> hurst;
  std::optional<std::int64_t> half_width;
  std::string source;  // e.g. "lattice", "point-set", "poisson"
  StreamKey key;
  std::optional<double> shift_halfwidth;  // set when stationarized
  std::optional<double> shift;            // the realized uniform shift
};

/// Finite sorted point set in one dimension.
///
/// Palm configurations always contain 0, stored as the literal 0.0.
class PointConfiguration {
 public:
  /// Throws InvalidParameter unless `points` is sorted, finite, and (for
  /// Palm kind) contains 0.
  PointConfiguration(std::vector<double> points, ConfigKind kind, ConfigMeta meta);

  std::span<const double> points() const noexcept { return points_; }
  ConfigKind kind() const noexcept { return kind_; }
  const ConfigMeta& meta() const noexcept { return meta_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  /// max - min, or 0 for fewer than two points.
  double extent() const noexcept;
  bool contains(double x) const noexcept;

 private:
  std::vector<double> points_;
  ConfigKind kind_;
  ConfigMeta meta_;
};

/// Palm configuration {n + B_n : -N <= n <= N} for an fBm path B.
PointConfiguration perturb_palm_lattice(HurstIndex h, std::int64_t half_width, StreamKey key,
                                        TwoSidedMode mode = TwoSidedMode::kRebased);

/// {n + displacement[n + N]} for a caller-supplied path; displacement must
/// have odd length 2N+1 with displacement[N] == 0. Used to feed prescribed
/// perturbations (e.g. B = 0) through the same construction.
PointConfiguration perturb_lattice_with(std::span<const double> displacement, ConfigMeta meta);

/// Palm configuration built from an already sampled lattice path.
PointConfiguration perturb_lattice_with(const FbmPath& path);

/// {x + B_x : x in base} with B sampled at the base points. Integer-valued
/// bases forming a contiguous lattice window use the FFT path sampler;
/// anything else goes through the dense sampler.
PointConfiguration perturb_point_set(const PointConfiguration& base, HurstIndex h, StreamKey key);

/// Every point shifted by the same amount; kind and metadata are kept.
PointConfiguration translate(const PointConfiguration& config, double shift);

/// Approximate stationarization: translate by U ~ Uniform[-halfwidth, halfwidth].
/// Requires halfwidth <= extent/4 (WindowTooSmall otherwise).
PointConfiguration depalmize(const PointConfiguration& config, double halfwidth, StreamKey key);

/// The uniform shift depalmize(config, halfwidth, key) applies.
double depalmize_shift(double halfwidth, StreamKey key);

/// Homogeneous intensity-1 Poisson configuration on [-length/2, length/2),
/// built from exponential spacings.
PointConfiguration poisson_configuration(double length, StreamKey key);

/// Number of points of a sorted sequence inside the closed interval [lo, hi].
std::size_t count_between(std::span<const double> sorted, double lo, double hi) noexcept;

}  // namespace palmfbm
