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

#include "palmfbm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ensemble.hpp"
#include "palmfbm/errors.hpp"
#include "palmfbm/parallel.hpp"

namespace palmfbm {
namespace {

// Unbiased variance of column r over the realizations listed in `rows`.
double column_variance(const CountEnsemble& e, std::size_t r, std::span<const std::size_t> rows) {
  const auto n = static_cast<double>(rows.size());
  double mean = 0.0;
  for (std::size_t i : rows) mean += static_cast<double>(e.at(i, r));
  mean /= n;
  double ss = 0.0;
  for (std::size_t i : rows) {
    const double d = static_cast<double>(e.at(i, r)) - mean;
    ss += d * d;
  }
  return ss / (n - 1.0);
}

// resamples x radii matrix of bootstrap variances.
std::vector<std::vector<double>> bootstrap_variances(const CountEnsemble& e, std::size_t resamples,
                                                     StreamKey key, unsigned threads) {
  std::vector<std::vector<double>> out(resamples);
  const std::size_t m = e.realizations;
  parallel_for(resamples, threads, [&](std::size_t b) {
    RandomStream stream(key.child(b));
    std::vector<std::size_t> rows(m);
    for (auto& row : rows) row = static_cast<std::size_t>(stream.next_below(m));
    out[b].resize(e.radii.size());
    for (std::size_t r = 0; r < e.radii.size(); ++r) out[b][r] = column_variance(e, r, rows);
  });
  return out;
}

double sample_stddev(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

RegressionFit fit_log_log(std::span<const double> radii, std::span<const double> variances,
                          std::span<const double> weights) {
  if (radii.size() < 3) {
    throw InsufficientData("log-log regression needs at least 3 radii, got " +
                           std::to_string(radii.size()));
  }
  std::vector<double> x(radii.size());
  std::vector<double> y(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(variances[i] > 0.0)) {
      throw NonpositiveVariance("variance at r=" + std::to_string(radii[i]) + " is " +
                                std::to_string(variances[i]));
    }
    if (!(radii[i] > 0.0)) throw InvalidParameter("radii must be positive");
    x[i] = std::log(radii[i]);
    y[i] = std::log(variances[i]);
  }
  return linear_fit(x, y, weights);
}

StreamKey bootstrap_key_for(StreamKey key) { return key.child(0xB007'57A9ull); }

}  // namespace

std::size_t count_in_ball(const PointConfiguration& config, double r) {
  if (!(r > 0.0)) throw InvalidParameter("ball radius must be positive");
  if (r > config.extent() / 2.0) {
    throw WindowTooSmall("radius " + std::to_string(r) + " exceeds half the configuration extent " +
                         std::to_string(config.extent()));
  }
  return count_between(config.points(), -r, r);
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0) {
    throw InvalidParameter("log_spaced needs 0 < lo <= hi and n >= 1");
  }
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(a + step * static_cast<double>(i));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::string_view to_string(ScanMode mode) noexcept {
  return mode == ScanMode::kPalm ? "palm" : "stationarized";
}

std::optional<ScanMode> parse_scan_mode(std::string_view text) noexcept {
  if (text == "palm") return ScanMode::kPalm;
  if (text == "stationarized") return ScanMode::kStationarized;
  return std::nullopt;
}

std::vector<double> default_radii(std::int64_t half_width) {
  return log_spaced(16.0, static_cast<double>(half_width) / 16.0, 24);
}

CountEnsemble sample_count_ensemble(const ScanParameters& params, StreamKey key) {
  const HurstIndex h(params.hurst);
  if (params.realizations < 2) {
    throw DegenerateEnsemble("variance needs at least 2 realizations, got " +
                             std::to_string(params.realizations));
  }
  if (params.radii.empty()) throw InvalidParameter("radius grid is empty");
  if (!std::is_sorted(params.radii.begin(), params.radii.end())) {
    throw InvalidParameter("radius grid must be ascending");
  }
  const double limit = static_cast<double>(params.half_width) / 2.0;
  if (params.radii.back() > limit) {
    throw WindowTooSmall("largest radius " + std::to_string(params.radii.back()) +
                         " exceeds N/2 = " + std::to_string(limit));
  }
  const double shift = params.mode == ScanMode::kPalm
                           ? 0.0
                           : (params.shift_halfwidth > 0.0 ? params.shift_halfwidth
                                                           : static_cast<double>(params.half_width) / 4.0);

  CountEnsemble ensemble;
  ensemble.radii = params.radii;
  ensemble.realizations = params.realizations;
  ensemble.counts.assign(params.realizations * params.radii.size(), 0);
  const std::size_t nr = params.radii.size();

  const FbmLatticeSampler sampler(h, params.half_width, params.fbm_mode);
  detail::for_each_lattice_realization(
      sampler, params.realizations, key, shift, params.threads,
      [&](std::size_t i, const PointConfiguration& config) {
        for (std::size_t r = 0; r < nr; ++r) {
          ensemble.counts[i * nr + r] = count_in_ball(config, params.radii[r]);
        }
      });
  return ensemble;
}

RadialVarianceTable summarize_counts(const CountEnsemble& ensemble, std::size_t resamples,
                                     StreamKey bootstrap_key) {
  if (ensemble.realizations < 2) {
    throw DegenerateEnsemble("variance needs at least 2 realizations");
  }
  RadialVarianceTable table;
  table.radii = ensemble.radii;
  table.realizations = ensemble.realizations;
  const std::size_t nr = ensemble.radii.size();
  table.mean_count.resize(nr);
  table.var_count.resize(nr);
  table.var_stderr.resize(nr);

  std::vector<std::size_t> all(ensemble.realizations);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t r = 0; r < nr; ++r) {
    double mean = 0.0;
    for (std::size_t i : all) mean += static_cast<double>(ensemble.at(i, r));
    table.mean_count[r] = mean / static_cast<double>(all.size());
    table.var_count[r] = column_variance(ensemble, r, all);
  }

  const auto boot = bootstrap_variances(ensemble, std::max<std::size_t>(resamples, 2), bootstrap_key, 1);
  std::vector<double> column(boot.size());
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t b = 0; b < boot.size(); ++b) column[b] = boot[b][r];
    table.var_stderr[r] = sample_stddev(column);
  }
  return table;
}

RadialVarianceTable number_variance_scan(const ScanParameters& params, StreamKey key) {
  const CountEnsemble ensemble = sample_count_ensemble(params, key);
  RadialVarianceTable table =
      summarize_counts(ensemble, params.bootstrap_resamples, bootstrap_key_for(key));
  table.hurst = params.hurst;
  table.half_width = params.half_width;
  table.seed = key.master_seed;
  table.mode = params.mode;
  return table;
}

RegressionFit linear_fit(std::span<const double> x, std::span<const double> y,
                         std::span<const double> weights) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n || (!weights.empty() && weights.size() != n)) {
    throw InsufficientData("linear fit needs matching x/y of length >= 2");
  }
  auto w = [&](std::size_t i) { return weights.empty() ? 1.0 : weights[i]; };
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sw += w(i);
    sx += w(i) * x[i];
    sy += w(i) * y[i];
  }
  const double mx = sx / sw;
  const double my = sy / sw;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += w(i) * dx * dx;
    sxy += w(i) * dx * dy;
    syy += w(i) * dy * dy;
  }
  if (!(sxx > 0.0)) throw InsufficientData("regressor has zero spread");

  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_points = n;
  fit.residuals.resize(n);
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fit.residuals[i] = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += w(i) * fit.residuals[i] * fit.residuals[i];
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return fit;
}

RegressionFit loglog_regress(const RadialVarianceTable& table) {
  return fit_log_log(table.radii, table.var_count, {});
}

RegressionFit loglog_regress_weighted(const RadialVarianceTable& table) {
  std::vector<double> w(table.radii.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double rel = table.var_stderr[i] / table.var_count[i];
    if (!(rel > 0.0)) throw NonpositiveVariance("weighted fit needs positive standard errors");
    w[i] = 1.0 / (rel * rel);
  }
  return fit_log_log(table.radii, table.var_count, w);
}

std::vector<SweepEntry> exponent_sweep(std::span<const double> hurst_values,
                                       const ScanParameters& base, StreamKey key) {
  std::vector<SweepEntry> out;
  out.reserve(hurst_values.size());
  for (std::size_t k = 0; k < hurst_values.size(); ++k) {
    ScanParameters params = base;
    params.hurst = hurst_values[k];
    const StreamKey scan_key = key.child(k);
    const CountEnsemble ensemble = sample_count_ensemble(params, scan_key);
    const StreamKey boot_key = bootstrap_key_for(scan_key);

    SweepEntry entry;
    entry.hurst = params.hurst;
    entry.table = summarize_counts(ensemble, params.bootstrap_resamples, boot_key);
    entry.table.hurst = params.hurst;
    entry.table.half_width = params.half_width;
    entry.table.seed = key.master_seed;
    entry.table.mode = params.mode;
    entry.slope = loglog_regress(entry.table).slope;

    // Same resamples as the variance standard errors, refitted per replicate.
    const auto boot = bootstrap_variances(ensemble, std::max<std::size_t>(params.bootstrap_resamples, 2),
                                          boot_key, params.threads);
    std::vector<double> slopes;
    slopes.reserve(boot.size());
    for (const auto& vars : boot) slopes.push_back(fit_log_log(params.radii, vars, {}).slope);
    entry.slope_stderr = sample_stddev(slopes);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace palmfbm
