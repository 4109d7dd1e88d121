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
#include <string>
#include <string_view>

#include "palmfbm/hurst.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {

/// Test functions f for the Campbell identity
///   E[f(palm)] = E[ sum_{x in stationary, 0 <= x < 1} f(stationary - x) ].
enum class CampbellFunctionKind {
  kConstant,         // f = 1
  kCountInInterval,  // f = number of points in [-a, a]
  kEmptyGap,         // f = 1{no point in (0, b)}
};

struct CampbellFunction {
  CampbellFunctionKind kind = CampbellFunctionKind::kConstant;
  double parameter = 0.0;  // a or b

  /// f evaluated on `sorted` recentred at `origin`, i.e. f(sorted - origin).
  double evaluate(std::span<const double> sorted, double origin) const;
};

std::optional<CampbellFunction> parse_campbell_function(std::string_view id);
std::string to_string(const CampbellFunction& f);

struct CampbellOptions {
  TwoSidedMode fbm_mode = TwoSidedMode::kRebased;
  /// Shift half-width for the stationary side; 0 selects N/4.
  double shift_halfwidth = 0.0;
  unsigned threads = 1;
};

struct CampbellResult {
  double lhs = 0.0;
  double lhs_stderr = 0.0;
  double rhs = 0.0;
  double rhs_stderr = 0.0;
  double z = 0.0;  // (lhs - rhs) / sqrt(lhs_stderr^2 + rhs_stderr^2); 0 if both exact
  std::size_t realizations = 0;
};

/// Monte Carlo estimate of both sides of the Campbell identity for the
/// perturbed lattice. Palm and stationarized ensembles use disjoint streams
/// (key.child(0) and key.child(1)), so the two estimates are independent.
CampbellResult campbell_check(HurstIndex h, std::int64_t half_width, std::size_t realizations,
                              const CampbellFunction& f, StreamKey key,
                              const CampbellOptions& options = {});

}  // namespace palmfbm
