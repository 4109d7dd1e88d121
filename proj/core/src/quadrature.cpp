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

#include "palmfbm/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "palmfbm/errors.hpp"

namespace palmfbm {
namespace {

constexpr double kPieceRelTol = 1e-14;
constexpr unsigned kMaxDepth = 18;

// Euler transform of the partial sums p[0..m]: m rounds of neighbour averaging.
double euler_estimate(std::vector<double> p) {
  for (std::size_t len = p.size(); len > 1; --len) {
    for (std::size_t i = 0; i + 1 < len; ++i) p[i] = 0.5 * (p[i] + p[i + 1]);
  }
  return p.front();
}

}  // namespace

double integrate_finite(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                        bool endpoint_singular) {
  if (hi <= lo) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  double value = 0.0;
  if (endpoint_singular) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    value = integrator.integrate(f, lo, hi, kPieceRelTol, &error, &l1);
  } else {
    value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, kMaxDepth,
                                                                          kPieceRelTol, &error, &l1);
  }
  if (!std::isfinite(value) || error > std::max(abs_tol, 1e-10 * l1)) {
    std::ostringstream msg;
    msg << "finite-interval quadrature on [" << lo << ", " << hi << "] has error estimate " << error
        << " (target " << abs_tol << ", L1 norm " << l1 << ")";
    throw QuadratureFailure(msg.str());
  }
  return value;
}

OscillatoryResult integrate_cosine_tail(const std::function<double(double)>& f, double omega,
                                        double a, const OscillatoryOptions& options) {
  if (!(omega > 0.0) || !std::isfinite(a)) {
    throw InvalidParameter("oscillatory quadrature needs omega > 0 and finite lower limit");
  }
  const double half_period = std::numbers::pi / omega;
  auto g = [&](double x) { return f(x) * std::cos(omega * x); };
  auto zero = [&](double j) { return (j + 0.5) * half_period; };

  double j = std::ceil(a / half_period - 0.5);
  if (zero(j) <= a) j += 1.0;
  const double piece_tol = options.abs_tol * 1e-3;

  OscillatoryResult result;
  double sum = integrate_finite(g, a, zero(j), piece_tol, true);
  result.intervals = 1;
  for (std::size_t k = 0; k < options.direct_intervals; ++k, j += 1.0) {
    sum += integrate_finite(g, zero(j), zero(j + 1.0), piece_tol, false);
    ++result.intervals;
  }

  std::vector<double> partial{sum};
  double previous = sum;
  double previous_delta = INFINITY;
  for (std::size_t m = 1; m <= options.max_accelerated_intervals; ++m, j += 1.0) {
    const double piece = integrate_finite(g, zero(j), zero(j + 1.0), piece_tol, false);
    ++result.intervals;
    sum += piece;
    partial.push_back(sum);
    const double estimate = euler_estimate(partial);
    const double delta = std::fabs(estimate - previous);
    if (m >= 3 && delta <= options.abs_tol && previous_delta <= options.abs_tol) {
      result.value = estimate;
      result.error_estimate = delta;
      return result;
    }
    previous_delta = delta;
    previous = estimate;
  }
  throw QuadratureFailure("Euler-accelerated cosine integral did not converge to " +
                          std::to_string(options.abs_tol) + " after " +
                          std::to_string(result.intervals) + " half-periods (last change " +
                          std::to_string(previous_delta) + ")");
}

}  // namespace palmfbm
