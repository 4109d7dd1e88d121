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

#include "palmfbm/spectrum.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "ensemble.hpp"
#include "palmfbm/errors.hpp"
#include "palmfbm/parallel.hpp"
#include "palmfbm/quadrature.hpp"

namespace palmfbm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_frequency(double t) {
  if (!std::isfinite(t) || t == 0.0) {
    throw InvalidParameter("structure factor needs a finite nonzero t, got " + std::to_string(t));
  }
}

// log of 2 * int_N^inf exp(-t^2 x^{2h}/2) dx via the upper incomplete gamma:
// int_N^inf = (1/2h) (2/t^2)^{1/2h} Gamma(1/2h, t^2 N^{2h} / 2).
double log_tail_bound(double h, double t, double n) {
  const double a = 1.0 / (2.0 * h);
  const double z = 0.5 * t * t * std::pow(n, 2.0 * h);
  const double q = boost::math::gamma_q(a, z);
  if (q <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(2.0) - std::log(2.0 * h) + a * std::log(2.0 / (t * t)) + std::log(q) +
         boost::math::lgamma(a);
}

// Fixed-order pairwise summation of exp(-t^2 n^{2h}/2) cos(n t) over [lo, hi).
double pairwise_terms(double h2, double half_t2, double t, std::int64_t lo, std::int64_t hi) {
  if (hi - lo <= 256) {
    double s = 0.0;
    for (std::int64_t n = lo; n < hi; ++n) {
      const auto x = static_cast<double>(n);
      s += std::exp(-half_t2 * std::pow(x, h2)) * std::cos(x * t);
    }
    return s;
  }
  const std::int64_t mid = lo + (hi - lo) / 2;
  return pairwise_terms(h2, half_t2, t, lo, mid) + pairwise_terms(h2, half_t2, t, mid, hi);
}

// |sum_x exp(-i k dt x)|^2 / n for consecutive integers k in [k_lo, k_hi],
// stepping exp(-i dt x) by multiplication and resynchronising every 64 steps.
void dual_grid_intensity(std::span<const double> x, double dt, std::int64_t k_lo, std::int64_t k_hi,
                         std::vector<double>& out) {
  const std::size_t n = x.size();
  const auto count = static_cast<std::size_t>(k_hi - k_lo + 1);
  out.assign(count, 0.0);
  if (n == 0) return;
  std::vector<std::complex<double>> z(n), w(n);
  auto resync = [&](std::int64_t k) {
    for (std::size_t p = 0; p < n; ++p) z[p] = std::polar(1.0, -static_cast<double>(k) * dt * x[p]);
  };
  for (std::size_t p = 0; p < n; ++p) w[p] = std::polar(1.0, -dt * x[p]);
  resync(k_lo);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      if (i % 64 == 0) {
        resync(k_lo + static_cast<std::int64_t>(i));
      } else {
        for (std::size_t p = 0; p < n; ++p) z[p] *= w[p];
      }
    }
    double re = 0.0, im = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      re += z[p].real();
      im += z[p].imag();
    }
    out[i] = (re * re + im * im) / static_cast<double>(n);
  }
}

struct EmpiricalPlan {
  double window_length = 0.0;
  bool use_grid = false;
  double dt = 0.0;
  std::int64_t k_lo = 0;
  std::int64_t k_hi = 0;
  std::vector<std::int64_t> k;  // per requested t (grid mode)
  std::vector<double> t;
};

EmpiricalPlan plan_empirical(std::span<const double> t, const EmpiricalOptions& options) {
  if (!(options.window_length > 0.0)) {
    throw InvalidParameter("empirical structure factor needs a positive window length");
  }
  if (t.empty()) throw InvalidParameter("empirical structure factor needs at least one t");
  EmpiricalPlan plan;
  plan.window_length = options.window_length;
  plan.t.assign(t.begin(), t.end());
  plan.dt = kTwoPi / options.window_length;
  bool all_on_grid = true;
  for (double ti : t) {
    if (!(ti > 0.0)) throw InvalidParameter("empirical structure factor needs t > 0");
    if (!on_dual_grid(ti, options.window_length)) {
      all_on_grid = false;
      if (!options.allow_off_grid) {
        throw GridMismatch("t=" + std::to_string(ti) + " is not of the form 2 pi k / " +
                           std::to_string(options.window_length));
      }
    }
  }
  plan.use_grid = all_on_grid;
  if (all_on_grid) {
    for (double ti : t) plan.k.push_back(std::llround(ti / plan.dt));
    plan.k_lo = *std::min_element(plan.k.begin(), plan.k.end());
    plan.k_hi = *std::max_element(plan.k.begin(), plan.k.end());
  }
  return plan;
}

std::vector<double> window_points(const PointConfiguration& c, double length) {
  const auto pts = c.points();
  const auto lo = std::lower_bound(pts.begin(), pts.end(), -0.5 * length);
  const auto hi = std::lower_bound(lo, pts.end(), 0.5 * length);
  return {lo, hi};
}

std::vector<double> config_intensity(const PointConfiguration& c, const EmpiricalPlan& plan) {
  const std::vector<double> x = window_points(c, plan.window_length);
  std::vector<double> values(plan.t.size(), 0.0);
  if (x.empty()) return values;
  if (plan.use_grid) {
    std::vector<double> dense;
    dual_grid_intensity(x, plan.dt, plan.k_lo, plan.k_hi, dense);
    for (std::size_t i = 0; i < plan.k.size(); ++i) {
      values[i] = dense[static_cast<std::size_t>(plan.k[i] - plan.k_lo)];
    }
  } else {
    for (std::size_t i = 0; i < plan.t.size(); ++i) {
      double re = 0.0, im = 0.0;
      for (double xp : x) {
        re += std::cos(plan.t[i] * xp);
        im -= std::sin(plan.t[i] * xp);
      }
      values[i] = (re * re + im * im) / static_cast<double>(x.size());
    }
  }
  return values;
}

StructureFactorCurve reduce_empirical(const std::vector<std::vector<double>>& per_config,
                                      const EmpiricalPlan& plan) {
  StructureFactorCurve curve;
  curve.method = SpectrumMethod::kEmpirical;
  curve.t = plan.t;
  curve.window_length = plan.window_length;
  curve.realizations = per_config.size();
  const std::size_t nt = plan.t.size();
  const auto m = static_cast<double>(per_config.size());
  curve.s.assign(nt, 0.0);
  curve.trunc.assign(nt, 0.0);
  for (const auto& row : per_config) {
    for (std::size_t i = 0; i < nt; ++i) curve.s[i] += row[i];
  }
  for (double& v : curve.s) v /= m;
  if (per_config.size() > 1) {
    for (std::size_t i = 0; i < nt; ++i) {
      double ss = 0.0;
      for (const auto& row : per_config) ss += (row[i] - curve.s[i]) * (row[i] - curve.s[i]);
      curve.trunc[i] = std::sqrt(ss / (m - 1.0) / m);
    }
  }
  return curve;
}

}  // namespace

std::int64_t lattice_sum_cutoff(HurstIndex h, double t, double tol, std::int64_t max_terms) {
  require_frequency(t);
  if (!(tol > 0.0)) throw InvalidParameter("truncation tolerance must be positive");
  const double target = std::log(tol);
  const double at = std::fabs(t);
  auto ok = [&](std::int64_t n) { return log_tail_bound(h.value(), at, static_cast<double>(n)) < target; };
  if (ok(1)) return 1;
  std::int64_t hi = 2;
  while (!ok(hi)) {
    if (hi >= max_terms) {
      throw TruncationTooLarge("lattice sum at h=" + std::to_string(h.value()) +
                               ", t=" + std::to_string(t) + " needs more than " +
                               std::to_string(max_terms) + " terms for tolerance " +
                               std::to_string(tol));
    }
    hi = std::min(hi * 2, max_terms);
  }
  std::int64_t lo = hi / 2;  // ok(lo) is false
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

double structure_factor_partial_sum(HurstIndex h, double t, std::int64_t terms) {
  require_frequency(t);
  const double at = std::fabs(t);
  return 1.0 + 2.0 * pairwise_terms(h.two_h(), 0.5 * at * at, at, 1, terms + 1);
}

LatticeSum structure_factor_sum(HurstIndex h, double t, double tol, std::int64_t max_terms) {
  const std::int64_t n = lattice_sum_cutoff(h, t, tol, max_terms);
  return {structure_factor_partial_sum(h, t, n), n};
}

double brownian_structure_factor(double t) {
  require_frequency(t);
  const std::complex<double> q = std::exp(std::complex<double>(-0.5 * t * t, t));
  return 1.0 + 2.0 * (q / (1.0 - q)).real();
}

double continuum_structure_factor(HurstIndex h, double t, double tol) {
  require_frequency(t);
  if (!(tol > 0.0)) throw InvalidParameter("quadrature tolerance must be positive");
  const double at = std::fabs(t);
  const double half_t2 = 0.5 * at * at;
  const double e = h.two_h();
  OscillatoryOptions options;
  options.abs_tol = 0.5 * tol;
  const auto result =
      integrate_cosine_tail([&](double x) { return std::exp(-half_t2 * std::pow(x, e)); }, at, 0.0, options);
  return 2.0 * result.value;
}

double asymptotic_constant(HurstIndex h) {
  const double e = h.two_h();
  return e * std::tgamma(e) * std::sin(std::numbers::pi * h.value());
}

double asymptotic_structure_factor(HurstIndex h, double t) {
  require_frequency(t);
  return asymptotic_constant(h) * std::pow(std::fabs(t), 1.0 - h.two_h());
}

std::string_view to_string(SpectrumMethod method) noexcept {
  switch (method) {
    case SpectrumMethod::kSum:
      return "sum";
    case SpectrumMethod::kContinuum:
      return "continuum";
    case SpectrumMethod::kAsymptotic:
      return "asymptotic";
    case SpectrumMethod::kEmpirical:
      return "empirical";
  }
  return "unknown";
}

std::optional<SpectrumMethod> parse_spectrum_method(std::string_view text) noexcept {
  if (text == "sum") return SpectrumMethod::kSum;
  if (text == "continuum") return SpectrumMethod::kContinuum;
  if (text == "asymptotic") return SpectrumMethod::kAsymptotic;
  if (text == "empirical") return SpectrumMethod::kEmpirical;
  return std::nullopt;
}

StructureFactorCurve evaluate_structure_factor(HurstIndex h, SpectrumMethod method,
                                               std::span<const double> t, double tol) {
  StructureFactorCurve curve;
  curve.method = method;
  curve.hurst = h.value();
  curve.t.assign(t.begin(), t.end());
  curve.s.resize(t.size());
  curve.trunc.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    switch (method) {
      case SpectrumMethod::kSum: {
        const auto r = structure_factor_sum(h, t[i], tol);
        curve.s[i] = r.value;
        curve.trunc[i] = static_cast<double>(r.terms);
        break;
      }
      case SpectrumMethod::kContinuum:
        curve.s[i] = continuum_structure_factor(h, t[i], tol);
        curve.trunc[i] = tol;
        break;
      case SpectrumMethod::kAsymptotic:
        curve.s[i] = asymptotic_structure_factor(h, t[i]);
        curve.trunc[i] = 0.0;
        break;
      case SpectrumMethod::kEmpirical:
        throw InvalidParameter("the empirical method needs configurations");
    }
  }
  return curve;
}

std::vector<double> dual_grid(double window_length, double tmin, double tmax) {
  if (!(window_length > 0.0)) throw InvalidParameter("window length must be positive");
  const double dt = kTwoPi / window_length;
  std::vector<double> out;
  for (auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(tmin / dt)));
       static_cast<double>(k) * dt <= tmax; ++k) {
    out.push_back(static_cast<double>(k) * dt);
  }
  return out;
}

bool on_dual_grid(double t, double window_length) noexcept {
  const double k = t * window_length / kTwoPi;
  const double nearest = std::round(k);
  return nearest >= 1.0 && std::fabs(k - nearest) <= 1e-9 * std::max(1.0, nearest);
}

StructureFactorCurve empirical_structure_factor(std::span<const PointConfiguration> configs,
                                                std::span<const double> t,
                                                const EmpiricalOptions& options) {
  if (configs.empty()) throw DegenerateEnsemble("empirical structure factor needs configurations");
  const EmpiricalPlan plan = plan_empirical(t, options);
  std::vector<std::vector<double>> per_config(configs.size());
  parallel_for(configs.size(), options.threads,
               [&](std::size_t i) { per_config[i] = config_intensity(configs[i], plan); });
  return reduce_empirical(per_config, plan);
}

StructureFactorCurve empirical_structure_factor_lattice(HurstIndex h, std::int64_t half_width,
                                                        std::size_t realizations, StreamKey key,
                                                        std::span<const double> t,
                                                        const EmpiricalOptions& options) {
  if (realizations < 1) throw DegenerateEnsemble("empirical structure factor needs realizations");
  if (options.window_length > static_cast<double>(half_width)) {
    throw WindowTooSmall("window length exceeds the central half of the lattice window");
  }
  const EmpiricalPlan plan = plan_empirical(t, options);
  const FbmLatticeSampler sampler(h, half_width);
  std::vector<std::vector<double>> per_config(realizations);
  detail::for_each_lattice_realization(
      sampler, realizations, key, 0.0, options.threads,
      [&](std::size_t i, const PointConfiguration& c) { per_config[i] = config_intensity(c, plan); });
  StructureFactorCurve curve = reduce_empirical(per_config, plan);
  curve.hurst = h.value();
  curve.half_width = half_width;
  curve.seed = key.master_seed;
  return curve;
}

GapReport approximation_gap(HurstIndex h, std::span<const double> t, double tol) {
  GapReport report;
  report.min_gap = std::numeric_limits<double>::infinity();
  report.max_gap = -std::numeric_limits<double>::infinity();
  for (double ti : t) {
    if (!(ti > 0.0 && ti < std::numbers::pi)) {
      throw InvalidParameter("approximation gap is tabulated for t in (0, pi)");
    }
    GapRow row;
    row.t = ti;
    const auto sum = structure_factor_sum(h, ti, tol);
    row.sum = sum.value;
    row.terms = sum.terms;
    row.continuum = continuum_structure_factor(h, ti, tol);
    row.gap = row.sum - row.continuum;
    report.max_gap_over_t2 = std::max(report.max_gap_over_t2, row.gap / (ti * ti));
    report.min_gap = std::min(report.min_gap, row.gap);
    report.max_gap = std::max(report.max_gap, row.gap);
    report.rows.push_back(row);
  }
  const double slack = 10.0 * tol;
  report.within_bound = report.min_gap >= -slack;
  if (h.value() > 0.5) report.within_bound = report.within_bound && report.max_gap <= 6.0 + slack;
  return report;
}

}  // namespace palmfbm
