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

#include <cmath>
#include <string>

#include "palmfbm/errors.hpp"

namespace palmfbm {

/// Hurst index of a fractional Brownian motion, strictly inside (0, 1).
class HurstIndex {
 public:
  explicit HurstIndex(double h) : h_(h) {
    if (!(h > 0.0 && h < 1.0)) {
      throw InvalidParameter("Hurst index must lie strictly inside (0,1), got " +
                             std::to_string(h));
    }
  }

  double value() const noexcept { return h_; }
  double two_h() const noexcept { return 2.0 * h_; }

  /// h < 1/2: negatively correlated increments, hyperuniform lattice.
  bool hyperuniform() const noexcept { return h_ < 0.5; }

  friend bool operator==(HurstIndex a, HurstIndex b) noexcept { return a.h_ == b.h_; }

 private:
  double h_;
};

}  // namespace palmfbm
