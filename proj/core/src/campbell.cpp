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

#include "palmfbm/campbell.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "ensemble.hpp"
#include "palmfbm/errors.hpp"

namespace palmfbm {
namespace {

struct MeanAndError {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanAndError summarize(const std::vector<double>& x) {
  const auto n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double var = x.size() > 1 ? ss / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace

double CampbellFunction::evaluate(std::span<const double> sorted, double origin) const {
  switch (kind) {
    case CampbellFunctionKind::kConstant:
      return 1.0;
    case CampbellFunctionKind::kCountInInterval:
      return static_cast<double>(count_between(sorted, origin - parameter, origin + parameter));
    case CampbellFunctionKind::kEmptyGap: {
      const auto next = std::upper_bound(sorted.begin(), sorted.end(), origin);
      return (next == sorted.end() || *next - origin >= parameter) ? 1.0 : 0.0;
    }
  }
  return 0.0;
}

std::optional<CampbellFunction> parse_campbell_function(std::string_view id) {
  // Accepted forms: "const", "count:<a>", "gap:<b>".
  if (id == "const") return CampbellFunction{CampbellFunctionKind::kConstant, 0.0};
  const auto colon = id.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view name = id.substr(0, colon);
  const std::string_view arg = id.substr(colon + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || !(value > 0.0)) return std::nullopt;
  if (name == "count") return CampbellFunction{CampbellFunctionKind::kCountInInterval, value};
  if (name == "gap") return CampbellFunction{CampbellFunctionKind::kEmptyGap, value};
  return std::nullopt;
}

std::string to_string(const CampbellFunction& f) {
  switch (f.kind) {
    case CampbellFunctionKind::kConstant:
      return "const";
    case CampbellFunctionKind::kCountInInterval:
      return "count:" + std::to_string(f.parameter);
    case CampbellFunctionKind::kEmptyGap:
      return "gap:" + std::to_string(f.parameter);
  }
  return "unknown";
}

CampbellResult campbell_check(HurstIndex h, std::int64_t half_width, std::size_t realizations,
                              const CampbellFunction& f, StreamKey key,
                              const CampbellOptions& options) {
  if (realizations < 2) throw DegenerateEnsemble("Campbell check needs at least 2 realizations");
  const double shift =
      options.shift_halfwidth > 0.0 ? options.shift_halfwidth : static_cast<double>(half_width) / 4.0;
  if (f.kind == CampbellFunctionKind::kCountInInterval &&
      f.parameter + shift + 1.0 > static_cast<double>(half_width) / 2.0) {
    throw WindowTooSmall("test interval plus shift leaves the central half of the window");
  }
  const FbmLatticeSampler sampler(h, half_width, options.fbm_mode);

  std::vector<double> palm_values(realizations);
  std::vector<double> stationary_values(realizations);

  if (f.kind == CampbellFunctionKind::kConstant) {
    std::fill(palm_values.begin(), palm_values.end(), 1.0);
  } else {
    detail::for_each_lattice_realization(
        sampler, realizations, key.child(0), 0.0, options.threads,
        [&](std::size_t i, const PointConfiguration& c) { palm_values[i] = f.evaluate(c.points(), 0.0); });
  }

  detail::for_each_lattice_realization(
      sampler, realizations, key.child(1), shift, options.threads,
      [&](std::size_t i, const PointConfiguration& c) {
        const auto pts = c.points();
        double sum = 0.0;
        for (auto it = std::lower_bound(pts.begin(), pts.end(), 0.0); it != pts.end() && *it < 1.0; ++it) {
          sum += f.evaluate(pts, *it);
        }
        stationary_values[i] = sum;
      });

  const auto lhs = summarize(palm_values);
  const auto rhs = summarize(stationary_values);
  CampbellResult result;
  result.lhs = lhs.mean;
  result.lhs_stderr = lhs.stderr_;
  result.rhs = rhs.mean;
  result.rhs_stderr = rhs.stderr_;
  result.realizations = realizations;
  const double se = std::hypot(lhs.stderr_, rhs.stderr_);
  result.z = se > 0.0 ? (lhs.mean - rhs.mean) / se : 0.0;
  return result;
}

}  // namespace palmfbm
