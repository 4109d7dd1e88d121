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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   palmfbm_acceptance            run every criterion
//   palmfbm_acceptance 3 8        run the listed criteria
//
// The exit status is 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "palmfbm/campbell.hpp"
#include "palmfbm/cli/app.hpp"
#include "palmfbm/ergodicity.hpp"
#include "palmfbm/fgn.hpp"
#include "palmfbm/parallel.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/spectrum.hpp"
#include "palmfbm/stats.hpp"

namespace {

using namespace palmfbm;
using palmfbm::testing::moments;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

unsigned threads() { return std::max(1u, default_thread_count()); }

ScanParameters desk_scan(double h) {
  ScanParameters p;
  p.hurst = h;
  p.half_width = 1 << 15;
  p.radii = log_spaced(16.0, 4096.0, 24);
  p.realizations = 2000;
  p.mode = ScanMode::kStationarized;
  p.bootstrap_resamples = 200;
  p.threads = threads();
  return p;
}

Outcome variance_exponent() {
  const auto table = number_variance_scan(desk_scan(0.25), StreamKey{20260101, 0});
  const auto fit = loglog_regress(table);
  return {fit.slope >= 0.42 && fit.slope <= 0.58,
          fmt("h=0.25 n=2^16 M=2000: slope %.4f (target [0.42, 0.58]), R^2 %.4f", fit.slope, fit.r_squared)};
}

Outcome exponent_sweep_check() {
  const std::vector<double> hs{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.75};
  const auto sweep = exponent_sweep(hs, desk_scan(0.25), StreamKey{20260102, 0});
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const bool close = std::fabs(sweep[i].slope - 2.0 * sweep[i].hurst) <= 0.1;
    const bool rising = i == 0 || sweep[i].slope > sweep[i - 1].slope;
    pass = pass && close && rising;
    detail += fmt("%sh=%.2f:%.3f%s", i ? " " : "", sweep[i].hurst, sweep[i].slope, close ? "" : "(off)");
    if (!rising) detail += "(not increasing)";
  }
  return {pass, "slopes vs 2h within 0.1, increasing: " + detail};
}

Outcome brownian_closed_form() {
  double worst = 0.0;
  for (int k = 1; k <= 31; ++k) {
    const double t = 0.1 * k;
    const std::complex<double> q = std::exp(std::complex<double>(-0.5 * t * t, t));
    const double exact = 1.0 + 2.0 * (q / (1.0 - q)).real();
    worst = std::max(worst, std::fabs(structure_factor_sum(HurstIndex(0.5), t).value - exact));
  }
  return {worst <= 1e-10, fmt("max |sum - closed form| over t=0.1..3.1: %.3g (target 1e-10)", worst)};
}

Outcome asymptotic_law() {
  bool pass = true;
  std::string detail = "continuum/asymptote at t=1e-3:";
  for (double h : {0.2, 0.25, 0.3}) {
    const double ratio = continuum_structure_factor(HurstIndex(h), 1e-3) /
                         asymptotic_structure_factor(HurstIndex(h), 1e-3);
    pass = pass && ratio >= 0.98 && ratio <= 1.02;
    detail += fmt(" h=%.2f:%.6f", h, ratio);
  }
  const double sum = structure_factor_sum(HurstIndex(0.25), 0.1).value;
  const double cont = continuum_structure_factor(HurstIndex(0.25), 0.1, 1e-10);
  const double gap = std::fabs(sum - cont);
  pass = pass && gap <= 1e-3;
  detail += fmt("; h=0.25 t=0.1: sum %.9f continuum %.9f |gap| %.3g (target 1e-3)", sum, cont, gap);
  return {pass, detail};
}

Outcome empirical_spectrum() {
  const std::int64_t half_width = 1 << 11;
  const double window = static_cast<double>(half_width);
  const auto t = dual_grid(window, 0.5, 3.0);
  EmpiricalOptions opt;
  opt.window_length = window;
  opt.threads = threads();
  const HurstIndex h(0.25);
  const auto curve = empirical_structure_factor_lattice(h, half_width, 2000, StreamKey{20260105, 0}, t, opt);
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double exact = structure_factor_sum(h, t[i]).value;
    worst = std::max(worst, std::fabs(curve.s[i] - exact) / curve.trunc[i]);
  }

  std::vector<PointConfiguration> poisson;
  poisson.reserve(2000);
  for (std::uint64_t i = 0; i < 2000; ++i) poisson.push_back(poisson_configuration(window, StreamKey{20260106, i}));
  const auto control = empirical_structure_factor(poisson, t, opt);
  double worst_poisson = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst_poisson = std::max(worst_poisson, std::fabs(control.s[i] - 1.0) / control.trunc[i]);
  }
  return {worst <= 5.0 && worst_poisson <= 5.0,
          fmt("%zu dual-grid points in [0.5, 3]: max |s_hat - s|/SE %.2f, Poisson max |s_hat - 1|/SE %.2f "
              "(target 5)",
              t.size(), worst, worst_poisson)};
}

Outcome sampler_exactness() {
  constexpr std::size_t n = 4096;
  constexpr std::size_t realizations = 2000;
  constexpr int max_lag = 10;
  bool pass = true;
  std::string detail;
  for (double hv : {0.25, 0.5, 0.75}) {
    const HurstIndex h(hv);
    const CirculantFgnSampler sampler(h, n);
    std::vector<std::vector<double>> per_lag(max_lag + 1, std::vector<double>(realizations));
    parallel_for(realizations, threads(), [&](std::size_t i) {
      const auto x = sampler.sample(StreamKey{20260107, i});
      for (int k = 0; k <= max_lag; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j + k < n; ++j) acc += x[j] * x[j + k];
        per_lag[k][i] = acc / static_cast<double>(n - k);
      }
    });
    double worst = 0.0;
    for (int k = 0; k <= max_lag; ++k) {
      const auto m = moments(per_lag[k]);
      worst = std::max(worst, std::fabs(m.mean - fgn_autocovariance(h, k)) / m.se_mean);
    }
    const auto eig = circulant_eigenvalues(h, n);
    double total = 0.0;
    bool nonnegative = true;
    for (double l : eig) {
      total += l;
      nonnegative = nonnegative && l >= 0.0;
    }
    const double size = static_cast<double>(eig.size());
    const double trace_error = std::fabs(total - size) / size;
    pass = pass && worst <= 5.0 && nonnegative && trace_error <= 1e-8;
    detail += fmt("%sh=%.2f: max z %.2f, eigenvalues %s, |sum/2n - 1| %.2g", detail.empty() ? "" : "; ", hv,
                  worst, nonnegative ? ">= 0" : "NEGATIVE", trace_error);
  }
  return {pass, detail};
}

Outcome intensity_campbell() {
  constexpr std::int64_t half_width = 1 << 12;
  constexpr std::size_t realizations = 5000;
  bool pass = true;
  std::string detail;
  for (double hv : {0.25, 0.5}) {
    const HurstIndex h(hv);
    const double window = static_cast<double>(half_width) / 4.0;
    std::vector<double> density(2000);
    parallel_for(density.size(), threads(), [&](std::size_t i) {
      const auto st = depalmize(perturb_palm_lattice(h, half_width, StreamKey{20260108, i}),
                                static_cast<double>(half_width) / 4.0, StreamKey{20260109, i});
      const auto pts = st.points();
      const auto lo = std::lower_bound(pts.begin(), pts.end(), -window / 2.0);
      const auto hi = std::lower_bound(pts.begin(), pts.end(), window / 2.0);
      density[i] = static_cast<double>(hi - lo) / window;
    });
    const auto m = moments(density);
    const double zi = (m.mean - 1.0) / m.se_mean;
    pass = pass && std::fabs(zi) <= 5.0;
    detail += fmt("%sh=%.2f: intensity %.5f (z %.2f)", detail.empty() ? "" : "; ", hv, m.mean, zi);
    CampbellOptions opt;
    opt.threads = threads();
    for (const char* id : {"count:2", "gap:0.5"}) {
      const auto r = campbell_check(h, half_width, realizations, *parse_campbell_function(id),
                                    StreamKey{20260110, static_cast<std::uint64_t>(hv * 100)}, opt);
      pass = pass && std::fabs(r.z) <= 4.0;
      detail += fmt(", %s z %.2f", id, r.z);
    }
  }
  return {pass, detail};
}

Outcome mixing_criterion() {
  bool pass = true;
  std::string detail;
  for (double hv : {0.25, 0.75}) {
    const HurstIndex h(hv);
    const double t = 1e4;
    const double scaled = std::fabs(mixing_covariance(h, 1.0, 1.0, t)) * std::pow(t, 2.0 - 2.0 * hv);
    const double target = std::fabs(2.0 * hv * (2.0 * hv - 1.0));
    const double rel = std::fabs(scaled / target - 1.0);
    pass = pass && rel <= 0.01;
    detail += fmt("%sh=%.2f: |V(1e4)| t^{2-2h} %.6f vs %.4f", detail.empty() ? "" : "; ", hv, scaled, target);
    double worst = 0.0;
    for (double lag : {0.0, 1.0, 3.0, 10.0}) {
      const auto mc = mc_mixing_covariance(h, 1.0, 1.0, lag, 20000, StreamKey{20260111, static_cast<std::uint64_t>(lag)},
                                           threads());
      worst = std::max(worst, std::fabs(mc.estimate - increment_cross_covariance(h, 1.0, 1.0, lag)) / mc.std_error);
    }
    pass = pass && worst <= 5.0;
    detail += fmt(", Monte Carlo max z %.2f", worst);
  }
  return {pass, detail};
}

double median_seconds(std::int64_t half_width, int repeats) {
  std::vector<double> times;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const auto config = perturb_palm_lattice(HurstIndex(0.25), half_width, StreamKey{20260112, static_cast<std::uint64_t>(r)});
    const auto stop = std::chrono::steady_clock::now();
    if (config.size() != static_cast<std::size_t>(2 * half_width + 1)) return INFINITY;
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

Outcome sampling_performance() {
  const double small = median_seconds(1 << 18, 5);
  const double large = median_seconds(1 << 19, 5);
  const double ratio = large / small;
  return {large <= 5.0 && ratio <= 3.0,
          fmt("2^19 points %.3f s, 2^20 points %.3f s (target 5 s), ratio %.2f (target 3)", small, large, ratio)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "palmfbm_acceptance_determinism";
  fs::remove_all(root);
  const std::vector<std::vector<std::string>> runs{
      {"sample", "--h", "0.3", "--n", "65536", "--seed", "5", "--mode", "stationarized", "--out", "points.csv"},
      {"variance", "--n", "16384", "--realizations", "200", "--seed", "5", "--out", "variance.csv"},
      {"spectrum", "--method", "sum", "--tmin", "0.5", "--tmax", "3", "--nt", "20", "--out", "sum.csv"},
      {"spectrum", "--method", "continuum", "--tmin", "0.01", "--tmax", "3", "--nt", "20", "--grid", "log",
       "--out", "continuum.csv"},
      {"spectrum", "--method", "empirical", "--n", "4096", "--realizations", "200", "--dual-grid", "--tmin",
       "0.5", "--tmax", "3", "--seed", "5", "--out", "empirical.csv"},
      {"mixing", "--h", "0.75", "--tmax", "1e6", "--out", "mixing.csv"},
      {"regress", "--in", "variance.csv", "--weighted", "--out", "regress.json"},
      {"plot", "--in", "variance.csv", "--out", "variance.svg"},
      {"plot", "--in", "sum.csv", "empirical.csv", "--out", "spectrum.svg"},
  };
  const std::vector<std::string> data_files{"points.csv", "variance.csv", "variance.fit.json", "sum.csv",
                                            "continuum.csv", "empirical.csv", "mixing.csv", "regress.json",
                                            "variance.svg", "spectrum.svg"};
  const fs::path original = fs::current_path();
  for (const char* threads_flag : {"1", "8"}) {
    const fs::path dir = root / (std::string("threads_") + threads_flag);
    fs::create_directories(dir);
    fs::current_path(dir);
    for (auto args : runs) {
      if (args[0] != "regress" && args[0] != "plot") args.insert(args.end(), {"--threads", threads_flag});
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      if (code != cli::kExitOk) {
        fs::current_path(original);
        return {false, args[0] + " exited " + std::to_string(code) + ": " + err.str()};
      }
    }
    fs::current_path(original);
  }
  std::string mismatched;
  for (const auto& name : data_files) {
    const std::string a = slurp(root / "threads_1" / name);
    const std::string b = slurp(root / "threads_8" / name);
    if (a.empty() || a != b) mismatched += " " + name;
  }
  fs::remove_all(root);
  return {mismatched.empty(), mismatched.empty()
                                  ? fmt("%zu data files byte-identical across 1 and 8 threads", data_files.size())
                                  : "differing or empty:" + mismatched};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"variance_exponent", variance_exponent},       {"exponent_sweep", exponent_sweep_check},
      {"brownian_closed_form", brownian_closed_form}, {"asymptotic_law", asymptotic_law},
      {"empirical_spectrum", empirical_spectrum},     {"sampler_exactness", sampler_exactness},
      {"intensity_campbell", intensity_campbell},     {"mixing_criterion", mixing_criterion},
      {"sampling_performance", sampling_performance}, {"determinism", determinism},
  };
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "criterion index must be 1.." << criteria.size() << ", got '" << argv[i] << "'\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);
  }

  bool all = true;
  for (std::size_t k : selected) {
    const auto& c = criteria[k - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << " " << c.name << ": " << o.detail
              << fmt(" [%.1f s]", secs) << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
