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

#include "palmfbm/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "ensemble.hpp"
#include "palmfbm/errors.hpp"
#include "palmfbm/fbm.hpp"
#include "palmfbm/parallel.hpp"
#include "palmfbm/quadrature.hpp"
#include "palmfbm/stats.hpp"

namespace palmfbm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_integer(double x) { return std::isfinite(x) && x == std::round(x); }

}  // namespace

double variogram(HurstIndex h, double t) { return std::pow(std::fabs(t), h.two_h()); }

double mixing_covariance(HurstIndex h, double a, double b, double t) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double e = h.two_h();
  if (t > 0.0 && t + lo > 0.0 && t + hi > 0.0 && t + lo + hi > 0.0) {
    auto rel = [&](double x) { return std::expm1(e * std::log1p(x / t)); };
    const double r_lo = rel(lo);
    const double r_hi = rel(hi);
    const double r_sum = rel(lo + hi);
    const double bracket = r_lo + (r_hi - r_sum);
    const double floor = 8.0 * kEps * (std::fabs(r_lo) + std::fabs(r_hi) + std::fabs(r_sum));
    if (std::fabs(bracket) <= floor) return 0.0;
    return std::pow(t, e) * bracket;
  }
  const double v_t = variogram(h, t);
  const double v_lo = variogram(h, t + lo);
  const double v_hi = variogram(h, t + hi);
  const double v_sum = variogram(h, t + lo + hi);
  const double value = (v_lo - v_t) + (v_hi - v_sum);
  const double floor = 8.0 * kEps * (v_t + v_lo + v_hi + v_sum);
  return std::fabs(value) <= floor ? 0.0 : value;
}

double increment_cross_covariance(HurstIndex h, double a, double b, double t) {
  return 0.5 * mixing_covariance(h, a, b, t);
}

MixingVerdict mixing_decay_check(HurstIndex h, double a, double b, std::span<const double> t) {
  if (t.size() < 2) throw InvalidParameter("mixing grid needs at least two points");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw InvalidParameter("mixing grid must be strictly increasing");
  }
  if (t.back() < 1000.0) {
    throw InvalidParameter("mixing grid must reach t >= 1000, got " + std::to_string(t.back()));
  }
  MixingVerdict out;
  out.curve.a = a;
  out.curve.b = b;
  out.curve.hurst = h.value();
  out.curve.t.assign(t.begin(), t.end());
  out.curve.v.reserve(t.size());
  for (double ti : t) out.curve.v.push_back(mixing_covariance(h, a, b, ti));

  const auto& v = out.curve.v;
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
    out.mixing = true;
    return out;
  }
  bool decreasing = true;
  for (std::size_t i = t.size() / 2 + 1; i < t.size(); ++i) {
    decreasing = decreasing && std::fabs(v[i]) <= std::fabs(v[i - 1]);
  }
  out.mixing = decreasing && std::fabs(v.back()) < 1e-3 * std::fabs(v.front());
  return out;
}

std::vector<double> mixing_grid(double tmax, std::size_t points) {
  if (!(tmax > 1.0)) throw InvalidParameter("mixing grid needs tmax > 1");
  return log_spaced(1.0, tmax, points);
}

MonteCarloEstimate mc_mixing_covariance(HurstIndex h, double a, double b, double t,
                                        std::size_t realizations, StreamKey key, unsigned threads) {
  if (!is_integer(a) || !is_integer(b) || !is_integer(t)) {
    throw InvalidParameter("Monte Carlo mixing covariance needs integer a, b, t");
  }
  if (realizations < 2) throw DegenerateEnsemble("mixing covariance needs at least 2 paths");
  const auto ia = static_cast<std::int64_t>(a);
  const auto ib = static_cast<std::int64_t>(b);
  const auto it = static_cast<std::int64_t>(t);
  const std::int64_t half_width =
      std::max<std::int64_t>({std::llabs(ia), std::llabs(it), std::llabs(it + ib), 1});

  const FbmLatticeSampler sampler(h, half_width, TwoSidedMode::kRebased);
  std::vector<double> x(realizations), y(realizations);
  const std::size_t pairs = (realizations + 1) / 2;
  parallel_for(pairs, threads, [&](std::size_t j) {
    const auto paths = sampler.sample_pair(detail::pair_key(key, j));
    for (std::size_t member = 0; member < 2; ++member) {
      const std::size_t i = 2 * j + member;
      if (i >= realizations) break;
      const FbmPath& p = member == 0 ? paths.first : paths.second;
      x[i] = p.at(-ia);
      y[i] = p.at(it + ib) - p.at(it);
    }
  });

  const auto m = static_cast<double>(realizations);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < realizations; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < realizations; ++i) {
    const double z = (x[i] - mx) * (y[i] - my);
    sum += z;
    sum_sq += z * z;
  }
  MonteCarloEstimate out;
  out.realizations = realizations;
  out.estimate = sum / (m - 1.0);
  const double mean_z = sum / m;
  const double var_z = std::max(0.0, (sum_sq - m * mean_z * mean_z) / (m - 1.0));
  out.std_error = std::sqrt(var_z / m);
  return out;
}

double levy_variogram_integral(HurstIndex h, double t, double tol) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("Levy integral needs t > 0");
  const double e = h.two_h();
  const double inner = integrate_finite(
      [&](double x) {
        const double u = 0.5 * t * x;
        const double sinc = u < 1e-4 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
        return t * t * sinc * sinc * std::pow(x, 1.0 - e);
      },
      0.0, 1.0, 0.25 * tol, true);
  OscillatoryOptions options;
  options.abs_tol = 0.25 * tol;
  options.max_accelerated_intervals = 400;
  const auto tail =
      integrate_cosine_tail([&](double x) { return std::pow(x, -1.0 - e); }, t, 1.0, options);
  return 2.0 * inner + 2.0 / h.value() - 4.0 * tail.value;
}

double levy_scaling_check(HurstIndex h, double t1, double t2, double tol) {
  if (!(t1 > 0.0) || !(t2 > 0.0) || t1 == t2) {
    throw InvalidParameter("Levy scaling check needs distinct positive t1, t2");
  }
  const double e = h.two_h();
  const double r1 = levy_variogram_integral(h, t1, tol) / std::pow(t1, e);
  const double r2 = levy_variogram_integral(h, t2, tol) / std::pow(t2, e);
  return std::fabs(r1 - r2) / std::max(std::fabs(r1), std::fabs(r2));
}

}  // namespace palmfbm
