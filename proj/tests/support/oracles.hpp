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

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace palmfbm::testing {

/// Sample mean and unbiased variance with standard errors.
struct Moments {
  double mean = 0.0;
  double var = 0.0;
  double se_mean = 0.0;
  double se_var = 0.0;
};

inline Moments moments(std::span<const double> x) {
  const auto n = static_cast<double>(x.size());
  Moments m;
  for (double v : x) m.mean += v;
  m.mean /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = (v - m.mean) * (v - m.mean);
    m2 += d;
    m4 += d * d;
  }
  m.var = m2 / (n - 1.0);
  m2 /= n;
  m4 /= n;
  m.se_mean = std::sqrt(m.var / n);
  m.se_var = std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
  return m;
}

/// Number of x with lo <= x <= hi by linear scan.
inline std::size_t brute_count(std::span<const double> x, double lo, double hi) {
  std::size_t c = 0;
  for (double v : x) c += (v >= lo && v <= hi) ? 1 : 0;
  return c;
}

inline double fbm_variogram(double h, double t) { return std::pow(std::fabs(t), 2.0 * h); }

/// 2 int_0^inf exp(-t^2 x^{2h}/2) cos(t x) dx for h < 1/2, by rotating the
/// contour onto the imaginary axis, where the integrand no longer oscillates:
/// int_0^inf e^{-c u^{2h}} cos u du = int_0^inf e^{-c cos(pi h) y^{2h}} sin(c sin(pi h) y^{2h}) e^{-y} dy
/// with c = t^{2-2h}/2.
inline double continuum_by_rotation(double h, double t) {
  const double c = 0.5 * std::pow(t, 2.0 - 2.0 * h);
  const double a = c * std::cos(std::numbers::pi * h);
  const double b = c * std::sin(std::numbers::pi * h);
  boost::math::quadrature::exp_sinh<double> integrator;
  const double j = integrator.integrate(
      [&](double y) {
        const double p = std::pow(y, 2.0 * h);
        return std::exp(-a * p - y) * std::sin(b * p);
      },
      1e-14);
  return 2.0 * j / t;
}

/// Same quantity for h > 1/2 via the convergent power series of the
/// symmetric stable density with characteristic exponent 2h:
/// int_0^inf e^{-c u^a} cos u du = (1/a) sum_k (-1)^k Gamma((2k+1)/a) / (2k)! c^{-(2k+1)/a}.
inline double continuum_by_stable_series(double h, double t) {
  const double alpha = 2.0 * h;
  const double c = 0.5 * std::pow(t, 2.0 - 2.0 * h);
  long double sum = 0.0L;
  for (int k = 0; k < 200; ++k) {
    const double p = (2.0 * k + 1.0) / alpha;
    const long double log_term = boost::math::lgamma(p) - boost::math::lgamma(2.0 * k + 1.0) -
                                 p * std::log(c);
    const long double term = std::exp(log_term);
    sum += (k % 2 == 0 ? term : -term);
    if (k > 5 && term < 1e-18L * std::fabs(sum)) break;
  }
  return 2.0 * static_cast<double>(sum) / alpha / t;
}

}  // namespace palmfbm::testing
