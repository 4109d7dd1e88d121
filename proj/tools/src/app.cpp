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

#include "palmfbm/cli/app.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "manifest.hpp"
#include "palmfbm/csv.hpp"
#include "palmfbm/ergodicity.hpp"
#include "palmfbm/errors.hpp"
#include "palmfbm/fbm.hpp"
#include "palmfbm/parallel.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/spectrum.hpp"
#include "palmfbm/stats.hpp"
#include "svg.hpp"

#ifndef PALMFBM_VERSION
#define PALMFBM_VERSION "unknown"
#endif

namespace palmfbm::cli {
namespace {

struct CommonOptions {
  double h = 0.25;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

using Parameters = std::vector<std::pair<std::string, std::string>>;

void add_common(CLI::App& app, CommonOptions& c, bool out_required) {
  app.set_config("--config", "", "key=value file with default flag values (flags override it)");
  app.add_option("--h", c.h, "Hurst index in (0,1)")->capture_default_str();
  app.add_option("--seed", c.seed, "master seed")->capture_default_str();
  auto* out = app.add_option("--out", c.out, "output file");
  if (out_required) out->required();
  app.add_option("--threads", c.threads, "worker threads (0 = hardware concurrency)")->capture_default_str();
}

unsigned resolve_threads(unsigned threads) { return threads == 0 ? default_thread_count() : threads; }

Parameters common_parameters(const CommonOptions& c) {
  return {{"h", format_double(c.h)}, {"seed", std::to_string(c.seed)}, {"out", c.out}};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidParameter("cannot open output file '" + path + "'");
  return f;
}

void write_text(const std::string& path, const std::string& text) {
  auto f = open_output(path);
  f << text;
  if (!f) throw InvalidParameter("failed writing '" + path + "'");
}

CsvMetadata as_metadata(const Parameters& p, const std::string& command) {
  CsvMetadata meta{{"command", command}};
  for (const auto& entry : p) {
    if (entry.first != "out") meta.push_back(entry);
  }
  meta.emplace_back("tool_version", tool_version());
  return meta;
}

void write_manifest(const std::string& command, const Parameters& params, std::uint64_t seed,
                    std::vector<std::string> outputs) {
  RunManifest m;
  m.command = command;
  m.parameters = params;
  m.master_seed = seed;
  m.tool_version = tool_version();
  m.timestamp = utc_timestamp();
  const std::string path = sibling_path(outputs.front(), ".manifest.json");
  m.output_files = std::move(outputs);
  m.output_files.push_back(path);
  write_text(path, to_json(m));
}

std::string fit_json(const RegressionFit& fit) {
  nlohmann::ordered_json j;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["r_squared"] = fit.r_squared;
  j["n_points"] = fit.n_points;
  return j.dump(2) + "\n";
}

std::int64_t half_width_from_sites(std::int64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidParameter("--n must be an even number of sites >= 2, got " + std::to_string(n));
  }
  return n / 2;
}

template <typename Enum, typename Parse>
Enum parse_enum(const std::string& text, Parse parse, const std::string& flag) {
  const auto v = parse(text);
  if (!v) throw InvalidParameter("unknown value '" + text + "' for " + flag);
  return *v;
}

// ---------------------------------------------------------------- sample

int cmd_sample(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  CommonOptions c;
  std::int64_t n = 1 << 20;
  std::string mode = "palm";
  std::string fbm_mode = "rebased";
  double shift = 0.0;
  add_common(app, c, true);
  app.add_option("--n", n, "number of lattice sites (N = n/2, 2N+1 points)")->capture_default_str();
  app.add_option("--mode", mode, "palm | stationarized")->capture_default_str();
  app.add_option("--shift", shift, "dePalmization half-width (0 = N/4)")->capture_default_str();
  app.add_option("--fbm-mode", fbm_mode, "rebased | branches | dense")->capture_default_str();
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  const HurstIndex h(c.h);
  const std::int64_t N = half_width_from_sites(n);
  const auto kind = parse_enum<ScanMode>(mode, parse_scan_mode, "--mode");
  const auto path_mode = parse_enum<TwoSidedMode>(fbm_mode, parse_two_sided_mode, "--fbm-mode");
  const StreamKey key{c.seed, 0};

  PointConfiguration config = perturb_palm_lattice(h, N, key.child(0), path_mode);
  if (kind == ScanMode::kStationarized) {
    const double x = shift > 0.0 ? shift : static_cast<double>(N) / 4.0;
    config = depalmize(config, x, key.child(1));
    shift = x;
  }
  Parameters params = common_parameters(c);
  params.emplace_back("n", std::to_string(n));
  params.emplace_back("mode", mode);
  params.emplace_back("shift", format_double(shift));
  params.emplace_back("fbm_mode", fbm_mode);
  {
    auto f = open_output(c.out);
    write_points_csv(f, config, as_metadata(params, "sample"));
  }
  write_manifest("sample", params, c.seed, {c.out});
  out << "wrote " << config.size() << " points to " << c.out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- variance

int cmd_variance(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  CommonOptions c;
  std::int64_t n = 1 << 16;
  std::size_t realizations = 2000;
  double rmin = 16.0;
  double rmax = 0.0;
  std::size_t nr = 24;
  std::string mode = "stationarized";
  std::string fbm_mode = "rebased";
  double shift = 0.0;
  std::size_t bootstrap = 200;
  bool weighted = false;
  add_common(app, c, true);
  app.add_option("--n", n, "number of lattice sites (N = n/2)")->capture_default_str();
  app.add_option("--realizations", realizations, "Monte Carlo realizations M")->capture_default_str();
  app.add_option("--rmin", rmin, "smallest radius")->capture_default_str();
  app.add_option("--rmax", rmax, "largest radius (0 = n/16)")->capture_default_str();
  app.add_option("--nr", nr, "number of log-spaced radii")->capture_default_str();
  app.add_option("--mode", mode, "palm | stationarized")->capture_default_str();
  app.add_option("--shift", shift, "dePalmization half-width (0 = N/4)")->capture_default_str();
  app.add_option("--fbm-mode", fbm_mode, "rebased | branches | dense")->capture_default_str();
  app.add_option("--bootstrap", bootstrap, "bootstrap resamples for standard errors")->capture_default_str();
  app.add_flag("--weighted", weighted, "fit with inverse-variance weights");
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  ScanParameters p;
  p.hurst = HurstIndex(c.h).value();
  p.half_width = half_width_from_sites(n);
  if (rmax == 0.0) rmax = static_cast<double>(n) / 16.0;
  p.radii = log_spaced(rmin, rmax, nr);
  p.realizations = realizations;
  p.mode = parse_enum<ScanMode>(mode, parse_scan_mode, "--mode");
  p.fbm_mode = parse_enum<TwoSidedMode>(fbm_mode, parse_two_sided_mode, "--fbm-mode");
  p.shift_halfwidth = shift;
  p.bootstrap_resamples = bootstrap;
  p.threads = resolve_threads(c.threads);

  const auto table = number_variance_scan(p, StreamKey{c.seed, 0});
  const auto fit = weighted ? loglog_regress_weighted(table) : loglog_regress(table);

  Parameters params = common_parameters(c);
  params.emplace_back("n", std::to_string(n));
  params.emplace_back("realizations", std::to_string(realizations));
  params.emplace_back("rmin", format_double(rmin));
  params.emplace_back("rmax", format_double(rmax));
  params.emplace_back("nr", std::to_string(nr));
  params.emplace_back("mode", mode);
  params.emplace_back("shift", format_double(shift));
  params.emplace_back("fbm_mode", fbm_mode);
  params.emplace_back("bootstrap", std::to_string(bootstrap));
  params.emplace_back("weighted", weighted ? "true" : "false");
  {
    auto f = open_output(c.out);
    write_variance_csv(f, table, as_metadata(params, "variance"));
  }
  const std::string fit_path = sibling_path(c.out, ".fit.json");
  write_text(fit_path, fit_json(fit));
  write_manifest("variance", params, c.seed, {c.out, fit_path});
  out << "slope: " << format_double(fit.slope) << "\nr_squared: " << format_double(fit.r_squared) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  CommonOptions c;
  std::string method = "sum";
  std::vector<double> t_values;
  double tmin = 0.1;
  double tmax = 3.1;
  std::size_t nt = 31;
  std::string grid = "linear";
  double tol = 1e-10;
  std::int64_t n = 1 << 12;
  std::size_t realizations = 2000;
  double window = 0.0;
  bool dual = false;
  bool allow_off_grid = false;
  add_common(app, c, true);
  app.add_option("--method,--mode", method, "sum | continuum | asymptotic | empirical")->capture_default_str();
  app.add_option("--t", t_values, "explicit frequencies (overrides the grid flags)")->delimiter(',');
  app.add_option("--tmin", tmin, "smallest frequency")->capture_default_str();
  app.add_option("--tmax", tmax, "largest frequency")->capture_default_str();
  app.add_option("--nt", nt, "number of frequencies")->capture_default_str();
  app.add_option("--grid", grid, "linear | log")->capture_default_str();
  app.add_option("--tol", tol, "truncation / quadrature tolerance")->capture_default_str();
  app.add_option("--n", n, "empirical: lattice sites (N = n/2)")->capture_default_str();
  app.add_option("--realizations", realizations, "empirical: configurations")->capture_default_str();
  app.add_option("--window", window, "empirical: window length L (0 = N)")->capture_default_str();
  app.add_flag("--dual-grid", dual, "empirical: use every 2 pi k / L in [tmin, tmax]");
  app.add_flag("--allow-off-grid", allow_off_grid, "empirical: accept t off the dual grid");
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  const HurstIndex h(c.h);
  const auto m = parse_enum<SpectrumMethod>(method, parse_spectrum_method, "--method");
  if (grid != "linear" && grid != "log") throw InvalidParameter("--grid must be linear or log");
  if (!(tmin > 0.0) || tmax < tmin || nt == 0) throw InvalidParameter("need 0 < tmin <= tmax and nt >= 1");

  std::int64_t N = 0;
  if (m == SpectrumMethod::kEmpirical) {
    N = half_width_from_sites(n);
    if (window == 0.0) window = static_cast<double>(N);
  }
  std::vector<double> t = t_values;
  if (t.empty()) {
    if (m == SpectrumMethod::kEmpirical && dual) {
      t = dual_grid(window, tmin, tmax);
      if (t.empty()) throw InvalidParameter("no dual-grid frequency inside [tmin, tmax]");
    } else if (grid == "log") {
      t = log_spaced(tmin, tmax, nt);
    } else {
      for (std::size_t i = 0; i < nt; ++i) {
        t.push_back(nt == 1 ? tmin : tmin + (tmax - tmin) * static_cast<double>(i) / static_cast<double>(nt - 1));
      }
    }
  }

  StructureFactorCurve curve;
  if (m == SpectrumMethod::kEmpirical) {
    EmpiricalOptions opt;
    opt.window_length = window;
    opt.allow_off_grid = allow_off_grid;
    opt.threads = resolve_threads(c.threads);
    curve = empirical_structure_factor_lattice(h, N, realizations, StreamKey{c.seed, 0}, t, opt);
  } else {
    curve = evaluate_structure_factor(h, m, t, tol);
  }

  Parameters params = common_parameters(c);
  params.emplace_back("method", method);
  params.emplace_back("tol", format_double(tol));
  if (t_values.empty()) {
    params.emplace_back("tmin", format_double(tmin));
    params.emplace_back("tmax", format_double(tmax));
    params.emplace_back("nt", std::to_string(nt));
    params.emplace_back("grid", dual ? "dual" : grid);
  } else {
    std::string list;
    for (double v : t_values) list += (list.empty() ? "" : ";") + format_double(v);
    params.emplace_back("t", list);
  }
  if (m == SpectrumMethod::kEmpirical) {
    params.emplace_back("n", std::to_string(n));
    params.emplace_back("realizations", std::to_string(realizations));
    params.emplace_back("window", format_double(window));
    params.emplace_back("allow_off_grid", allow_off_grid ? "true" : "false");
  }
  {
    auto f = open_output(c.out);
    write_spectrum_csv(f, curve, as_metadata(params, "spectrum"));
  }
  write_manifest("spectrum", params, c.seed, {c.out});
  out << "wrote " << curve.t.size() << " frequencies to " << c.out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- mixing

int cmd_mixing(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  CommonOptions c;
  double a = 1.0;
  double b = 1.0;
  double tmax = 1000.0;
  std::size_t nt = 64;
  add_common(app, c, false);
  app.add_option("--a", a, "lag a")->capture_default_str();
  app.add_option("--b", b, "lag b")->capture_default_str();
  app.add_option("--tmax", tmax, "largest t of the log-spaced grid starting at 1")->capture_default_str();
  app.add_option("--nt", nt, "grid points")->capture_default_str();
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  const HurstIndex h(c.h);
  const auto verdict = mixing_decay_check(h, a, b, mixing_grid(tmax, nt));
  Parameters params = common_parameters(c);
  params.emplace_back("a", format_double(a));
  params.emplace_back("b", format_double(b));
  params.emplace_back("tmax", format_double(tmax));
  params.emplace_back("nt", std::to_string(nt));
  if (!c.out.empty()) {
    {
      auto f = open_output(c.out);
      write_mixing_csv(f, verdict.curve, as_metadata(params, "mixing"));
    }
    write_manifest("mixing", params, c.seed, {c.out});
  }
  out << "V(t_min) = " << format_double(verdict.curve.v.front())
      << "\nV(t_max) = " << format_double(verdict.curve.v.back()) << '\n'
      << "mixing: " << (verdict.mixing ? "true" : "false") << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- regress

int cmd_regress(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  std::string in;
  std::string output;
  bool weighted = false;
  app.set_config("--config", "", "key=value file with default flag values (flags override it)");
  app.add_option("--in", in, "variance CSV")->required();
  app.add_option("--out", output, "fit JSON (default: standard output)");
  app.add_flag("--weighted", weighted, "fit with inverse-variance weights");
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  std::ifstream f(in);
  if (!f) throw InvalidParameter("cannot open input file '" + in + "'");
  const auto table = read_variance_csv(f);
  const auto fit = weighted ? loglog_regress_weighted(table) : loglog_regress(table);
  const std::string json = fit_json(fit);
  if (output.empty()) {
    out << json;
  } else {
    write_text(output, json);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- plot

PlotSpec plot_from_csv(const std::string& path, PlotSpec chart, bool with_fit) {
  const CsvTable csv = read_csv_file(path);
  const auto has = [&](const char* name) {
    return std::find(csv.columns.begin(), csv.columns.end(), name) != csv.columns.end();
  };
  PlotSeries s;
  s.label = std::filesystem::path(path).filename().string();
  if (has("var_count")) {
    std::ifstream f(path);
    const auto table = read_variance_csv(f);
    s.x = table.radii;
    s.y = table.var_count;
    chart.x_label = "r";
    chart.y_label = "Var N(r)";
    if (chart.title.empty()) chart.title = "number variance";
    if (with_fit && !chart.fit) {
      const auto fit = loglog_regress(table);
      chart.fit = PlotFit{fit.slope, fit.intercept};
    }
  } else if (has("s") && has("t")) {
    s.x = csv.numeric_column("t");
    s.y = csv.numeric_column("s");
    s.label += " (" + csv.rows.front()[csv.column("method")] + ")";
    chart.x_label = "t";
    chart.y_label = "s(t)";
    if (chart.title.empty()) chart.title = "structure factor";
  } else if (has("V") && has("t")) {
    s.x = csv.numeric_column("t");
    s.y = csv.numeric_column("V");
    for (double& v : s.y) v = std::fabs(v);
    chart.x_label = "t";
    chart.y_label = "|V(t)|";
    if (chart.title.empty()) chart.title = "mixing covariance";
  } else {
    throw MalformedInput("'" + path + "' is not a variance, spectrum or mixing CSV");
  }
  chart.series.push_back(std::move(s));
  return chart;
}

int cmd_plot(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> inputs;
  std::string output;
  std::string title;
  bool no_fit = false;
  app.set_config("--config", "", "key=value file with default flag values (flags override it)");
  app.add_option("--in", inputs, "input CSV files (variance, spectrum or mixing)")->required();
  app.add_option("--out", output, "output SVG")->required();
  app.add_option("--title", title, "chart title");
  app.add_flag("--no-fit", no_fit, "omit the fitted line on variance plots");
  app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

  PlotSpec chart;
  chart.title = title;
  for (const auto& path : inputs) chart = plot_from_csv(path, std::move(chart), !no_fit);
  write_text(output, render_loglog_svg(chart));
  out << "wrote " << output << '\n';
  return kExitOk;
}

using Command = int (*)(CLI::App&, const std::vector<std::string>&, std::ostream&);

const std::map<std::string, std::pair<Command, const char*>>& commands() {
  static const std::map<std::string, std::pair<Command, const char*>> table{
      {"sample", {cmd_sample, "sample one perturbed lattice configuration"}},
      {"variance", {cmd_variance, "Monte Carlo number-variance scan with log-log fit"}},
      {"spectrum", {cmd_spectrum, "structure factor by sum, continuum, asymptotic law or estimator"}},
      {"mixing", {cmd_mixing, "mixing covariance decay verdict"}},
      {"regress", {cmd_regress, "log-log regression of a variance CSV"}},
      {"plot", {cmd_plot, "log-log SVG of variance, spectrum or mixing CSVs"}},
  };
  return table;
}

void usage(std::ostream& os) {
  os << "usage: palmfbm <command> [flags]\n\ncommands:\n";
  for (const auto& [name, entry] : commands()) os << "  " << name << std::string(10 - name.size(), ' ') << entry.second << '\n';
  os << "\nRun 'palmfbm <command> --help' for the flags of one command.\n";
}

}  // namespace

std::string tool_version() { return PALMFBM_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    usage(err);
    return kExitUsage;
  }
  if (args[0] == "--help" || args[0] == "-h") {
    usage(out);
    return kExitOk;
  }
  if (args[0] == "--version") {
    out << "palmfbm " << tool_version() << '\n';
    return kExitOk;
  }
  const auto it = commands().find(args[0]);
  if (it == commands().end()) {
    err << "error: unknown command '" << args[0] << "'\n";
    usage(err);
    return kExitUsage;
  }
  CLI::App app(it->second.second, "palmfbm " + args[0]);
  app.set_help_flag("--help", "print the flags of this command");
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    return it->second.first(app, rest, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.category() == ErrorCategory::kDomain ? kExitUsage : kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace palmfbm::cli
