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
#include <span>
#include <vector>

#include "palmfbm/hurst.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {

/// Var B_t = |t|^{2h}.
double variogram(HurstIndex h, double t);

/// V_{a,b}(t) = v(t+a) + v(t+b) - v(t+a+b) - v(t).
///
/// Symmetric in (a, b) bit for bit and exactly zero when a or b is zero.
/// When t, t+a, t+b and t+a+b are all positive the bracket is evaluated as
/// t^{2h} [E(a) + E(b) - E(a+b)] with E(x) = (1 + x/t)^{2h} - 1 computed by
/// expm1/log1p, which keeps the far tail free of cancellation. Results below
/// the rounding resolution of that bracket are returned as 0.
double mixing_covariance(HurstIndex h, double a, double b, double t);

/// Cov(B_{-a}, B_{t+b} - B_t) = V_{a,b}(t) / 2.
double increment_cross_covariance(HurstIndex h, double a, double b, double t);

struct MixingCurve {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> t;
  std::vector<double> v;
  double hurst = 0.5;
};

struct MixingVerdict {
  MixingCurve curve;
  /// |V| non-increasing over the upper half of the grid and
  /// |V(t_max)| < 1e-3 |V(t_min)|; an identically zero curve passes.
  bool mixing = false;
};

/// Evaluates V_{a,b} on `t` (strictly increasing, t_max >= 1000).
MixingVerdict mixing_decay_check(HurstIndex h, double a, double b, std::span<const double> t);

/// Log-spaced grid from 1 to tmax with `points` entries.
std::vector<double> mixing_grid(double tmax, std::size_t points = 64);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t realizations = 0;
};

/// Sample covariance of (B_{-a}, B_{t+b} - B_t) over M exact two-sided
/// lattice paths; its expectation is increment_cross_covariance(h, a, b, t).
/// Paths come from the re-based sampler with
/// half-width max(|a|, |t|, |t+b|, 1). a, b, t must be integers. Paths 2j and 2j+1 come from key.child(j).
MonteCarloEstimate mc_mixing_covariance(HurstIndex h, double a, double b, double t,
                                        std::size_t realizations, StreamKey key,
                                        unsigned threads = 1);

/// I(t) = int_R (2 - 2 cos(t x)) |x|^{-1-2h} dx, split at |x| = 1: the inner
/// part by tanh-sinh, the outer part as 2/h minus an accelerated cosine tail.
double levy_variogram_integral(HurstIndex h, double t, double tol = 1e-12);

/// |I(t1)/t1^{2h} - I(t2)/t2^{2h}| / (I(t1)/t1^{2h}) for distinct positive t1, t2.
double levy_scaling_check(HurstIndex h, double t1, double t2, double tol = 1e-12);

}  // namespace palmfbm
