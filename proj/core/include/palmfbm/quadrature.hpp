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
#include <functional>

namespace palmfbm {

struct OscillatoryOptions {
  double abs_tol = 1e-12;
  /// Half-periods integrated and summed directly before acceleration.
  std::size_t direct_intervals = 12;
  /// Extra half-periods allowed for the accelerated tail.
  std::size_t max_accelerated_intervals = 120;
};

struct OscillatoryResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

/// Integral of f(x) cos(omega x) over [a, infinity) for a smooth f that is
/// eventually monotone and tends to zero.
///
/// The range is cut at the zeros of cos(omega x). The piece starting at `a`
/// is integrated by tanh-sinh (f may have an algebraic endpoint
/// singularity there), the others by adaptive Gauss-Kronrod, and the resulting sign-alternating series of
/// partial sums is accelerated by repeated averaging (Euler transform).
/// Throws QuadratureFailure when successive accelerated estimates do not
/// settle within abs_tol.
OscillatoryResult integrate_cosine_tail(const std::function<double(double)>& f, double omega,
                                        double a, const OscillatoryOptions& options = {});

/// Adaptive Gauss-Kronrod (31-point) on a finite interval; tanh-sinh is
/// used instead when `endpoint_singular` is set.
double integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                        double abs_tol, bool endpoint_singular = false);

}  // namespace palmfbm
