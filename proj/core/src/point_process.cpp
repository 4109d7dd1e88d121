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

#include "palmfbm/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "palmfbm/errors.hpp"

namespace palmfbm {
namespace {

bool is_contiguous_lattice(std::span<const double> pts) {
  if (pts.size() < 3 || pts.size() % 2 == 0) return false;
  const auto half = static_cast<double>(pts.size() / 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] != static_cast<double>(i) - half) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ConfigKind kind) noexcept {
  return kind == ConfigKind::kPalm ? "palm" : "stationarized";
}

PointConfiguration::PointConfiguration(std::vector<double> points, ConfigKind kind, ConfigMeta meta)
    : points_(std::move(points)), kind_(kind), meta_(std::move(meta)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw InvalidParameter("configuration has a non-finite point");
    if (i > 0 && points_[i] < points_[i - 1]) {
      throw InvalidParameter("configuration points must be sorted ascending");
    }
  }
  if (kind_ == ConfigKind::kPalm && !contains(0.0)) {
    throw InvalidParameter("a Palm configuration must contain the origin");
  }
}

double PointConfiguration::extent() const noexcept {
  return points_.size() < 2 ? 0.0 : points_.back() - points_.front();
}

bool PointConfiguration::contains(double x) const noexcept {
  return std::binary_search(points_.begin(), points_.end(), x);
}

PointConfiguration perturb_lattice_with(std::span<const double> displacement, ConfigMeta meta) {
  if (displacement.size() % 2 == 0) {
    throw InvalidParameter("lattice displacement must have odd length 2N+1");
  }
  const auto N = static_cast<std::int64_t>(displacement.size() / 2);
  if (displacement[static_cast<std::size_t>(N)] != 0.0) {
    throw InvalidParameter("displacement at the origin must be exactly 0");
  }
  std::vector<double> points(displacement.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i] = static_cast<double>(static_cast<std::int64_t>(i) - N) + displacement[i];
  }
  // n + B_n is 0.0 + 0.0 at the origin, so the Palm atom is stored exactly.
  std::sort(points.begin(), points.end());
  if (!meta.half_width) meta.half_width = N;
  return PointConfiguration(std::move(points), ConfigKind::kPalm, std::move(meta));
}

PointConfiguration perturb_lattice_with(const FbmPath& path) {
  ConfigMeta meta;
  meta.hurst = path.hurst;
  meta.half_width = path.half_width;
  meta.source = "lattice";
  meta.key = path.key;
  return perturb_lattice_with(path.values, std::move(meta));
}

PointConfiguration perturb_palm_lattice(HurstIndex h, std::int64_t half_width, StreamKey key,
                                        TwoSidedMode mode) {
  return perturb_lattice_with(sample_fbm_lattice(h, half_width, key, mode));
}

PointConfiguration perturb_point_set(const PointConfiguration& base, HurstIndex h, StreamKey key) {
  if (base.kind() != ConfigKind::kPalm) {
    throw InvalidParameter("perturb_point_set expects a Palm configuration");
  }
  const auto pts = base.points();
  ConfigMeta meta = base.meta();
  meta.hurst = h.value();
  meta.key = key;
  meta.source = "point-set";

  if (is_contiguous_lattice(pts)) {
    const auto N = static_cast<std::int64_t>(pts.size() / 2);
    const FbmPath path = sample_fbm_lattice(h, N, key);
    meta.half_width = N;
    return perturb_lattice_with(path.values, std::move(meta));
  }

  std::vector<double> unique(pts.begin(), pts.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() != pts.size()) {
    throw InvalidParameter("perturb_point_set needs distinct base points");
  }
  const std::vector<double> b = sample_fbm_points(h, pts, key);
  std::vector<double> moved(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    moved[i] = pts[i] == 0.0 ? 0.0 : pts[i] + b[i];
  }
  std::sort(moved.begin(), moved.end());
  return PointConfiguration(std::move(moved), ConfigKind::kPalm, std::move(meta));
}

PointConfiguration translate(const PointConfiguration& config, double shift) {
  std::vector<double> moved(config.points().begin(), config.points().end());
  for (double& x : moved) x += shift;  // monotone, so order is preserved
  ConfigMeta meta = config.meta();
  if (config.kind() == ConfigKind::kPalm && shift != 0.0) {
    meta.shift = shift;
    return PointConfiguration(std::move(moved), ConfigKind::kStationarized, std::move(meta));
  }
  return PointConfiguration(std::move(moved), config.kind(), std::move(meta));
}

double depalmize_shift(double halfwidth, StreamKey key) {
  const double u = RandomStream(key).uniform_pair(0)[0];
  return halfwidth * (2.0 * u - 1.0);
}

PointConfiguration depalmize(const PointConfiguration& config, double halfwidth, StreamKey key) {
  if (!(halfwidth > 0.0)) {
    throw InvalidParameter("dePalmization half-width must be positive");
  }
  if (halfwidth > config.extent() / 4.0) {
    throw WindowTooSmall("shift half-width " + std::to_string(halfwidth) +
                         " exceeds a quarter of the configuration extent " +
                         std::to_string(config.extent()));
  }
  const double shift = depalmize_shift(halfwidth, key);
  std::vector<double> moved(config.points().begin(), config.points().end());
  for (double& x : moved) x += shift;
  ConfigMeta meta = config.meta();
  meta.shift_halfwidth = halfwidth;
  meta.shift = shift;
  return PointConfiguration(std::move(moved), ConfigKind::kStationarized, std::move(meta));
}

PointConfiguration poisson_configuration(double length, StreamKey key) {
  if (!(length > 0.0)) throw InvalidParameter("Poisson window length must be positive");
  RandomStream stream(key);
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(length * 1.1) + 16);
  const double lo = -0.5 * length;
  const double hi = 0.5 * length;
  double x = lo - std::log(stream.next_uniform());
  while (x < hi) {
    points.push_back(x);
    x -= std::log(stream.next_uniform());
  }
  ConfigMeta meta;
  meta.source = "poisson";
  meta.key = key;
  return PointConfiguration(std::move(points), ConfigKind::kStationarized, std::move(meta));
}

std::size_t count_between(std::span<const double> sorted, double lo, double hi) noexcept {
  if (hi < lo) return 0;
  const auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
  const auto last = std::upper_bound(first, sorted.end(), hi);
  return static_cast<std::size_t>(last - first);
}

}  // namespace palmfbm
