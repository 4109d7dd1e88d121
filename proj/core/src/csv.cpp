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

#include "palmfbm/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "palmfbm/errors.hpp"

namespace palmfbm {
namespace {

void write_metadata(std::ostream& out, const CsvMetadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << '=' << value << '\n';
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::optional<std::int64_t> parse_int(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc() || ptr != text->data() + text->size()) {
    throw MalformedInput("expected an integer, got '" + *text + "'");
  }
  return v;
}

std::optional<std::uint64_t> parse_uint(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc() || ptr != text->data() + text->size()) {
    throw MalformedInput("expected an unsigned integer, got '" + *text + "'");
  }
  return v;
}

// Extra keys already described by the writer are dropped.
void append(CsvMetadata& meta, const CsvMetadata& extra) {
  for (const auto& entry : extra) {
    const bool present = std::any_of(meta.begin(), meta.end(),
                                     [&](const auto& m) { return m.first == entry.first; });
    if (!present) meta.push_back(entry);
  }
}

}  // namespace

std::string format_double(double x) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw MalformedInput("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::optional<std::string> CsvTable::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw MalformedInput("missing column '" + std::string(name) + "'");
}

std::vector<double> CsvTable::numeric_column(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(parse_double(row[c]));
  return out;
}

CsvTable read_csv(std::istream& in, bool has_header) {
  CsvTable table;
  std::string line;
  bool header_seen = !has_header;
  if (!has_header) table.columns = {"x"};
  while (std::getline(in, line)) {
    line = strip_cr(std::move(line));
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!table.rows.empty() || (has_header && header_seen)) {
        throw MalformedInput("metadata line after data: " + line);
      }
      std::string body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw MalformedInput("metadata line without '=': " + line);
      table.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    auto fields = split_fields(line);
    if (!header_seen) {
      table.columns = std::move(fields);
      header_seen = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw MalformedInput("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(table.columns.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!header_seen) throw MalformedInput("CSV has no header row");
  return table;
}

CsvTable read_csv_file(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open input file '" + path + "'");
  return read_csv(in, has_header);
}

CsvMetadata describe(const PointConfiguration& config) {
  const ConfigMeta& m = config.meta();
  CsvMetadata out;
  out.emplace_back("kind", std::string(to_string(config.kind())));
  if (!m.source.empty()) out.emplace_back("source", m.source);
  if (m.hurst) out.emplace_back("h", format_double(*m.hurst));
  if (m.half_width) out.emplace_back("half_width", std::to_string(*m.half_width));
  out.emplace_back("master_seed", std::to_string(m.key.master_seed));
  out.emplace_back("stream_index", std::to_string(m.key.stream_index));
  if (m.shift_halfwidth) out.emplace_back("shift_halfwidth", format_double(*m.shift_halfwidth));
  if (m.shift) out.emplace_back("shift", format_double(*m.shift));
  out.emplace_back("points", std::to_string(config.size()));
  return out;
}

void write_points_csv(std::ostream& out, const PointConfiguration& config, const CsvMetadata& extra) {
  CsvMetadata meta = describe(config);
  append(meta, extra);
  write_metadata(out, meta);
  std::string buffer;
  buffer.reserve(1 << 16);
  for (double x : config.points()) {
    buffer += format_double(x);
    buffer += '\n';
    if (buffer.size() > (1 << 16) - 64) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

std::vector<double> read_points_csv(std::istream& in) {
  return read_csv(in, false).numeric_column("x");
}

void write_variance_csv(std::ostream& out, const RadialVarianceTable& table, const CsvMetadata& extra) {
  CsvMetadata meta{{"h", format_double(table.hurst)},
                   {"half_width", std::to_string(table.half_width)},
                   {"realizations", std::to_string(table.realizations)},
                   {"mode", std::string(to_string(table.mode))},
                   {"master_seed", std::to_string(table.seed)}};
  append(meta, extra);
  write_metadata(out, meta);
  out << "r,mean_count,var_count,var_stderr\n";
  for (std::size_t i = 0; i < table.radii.size(); ++i) {
    out << format_double(table.radii[i]) << ',' << format_double(table.mean_count[i]) << ','
        << format_double(table.var_count[i]) << ',' << format_double(table.var_stderr[i]) << '\n';
  }
}

RadialVarianceTable read_variance_csv(std::istream& in) {
  const CsvTable csv = read_csv(in);
  RadialVarianceTable table;
  table.radii = csv.numeric_column("r");
  table.mean_count = csv.numeric_column("mean_count");
  table.var_count = csv.numeric_column("var_count");
  table.var_stderr = csv.numeric_column("var_stderr");
  if (auto h = csv.meta("h")) table.hurst = parse_double(*h);
  if (auto n = parse_int(csv.meta("half_width"))) table.half_width = *n;
  if (auto m = parse_uint(csv.meta("realizations"))) table.realizations = *m;
  if (auto s = parse_uint(csv.meta("master_seed"))) table.seed = *s;
  if (auto mode = csv.meta("mode")) {
    const auto parsed = parse_scan_mode(*mode);
    if (!parsed) throw MalformedInput("unknown scan mode '" + *mode + "'");
    table.mode = *parsed;
  }
  return table;
}

void write_spectrum_csv(std::ostream& out, const StructureFactorCurve& curve, const CsvMetadata& extra) {
  CsvMetadata meta{{"method", std::string(to_string(curve.method))}};
  if (curve.hurst) meta.emplace_back("h", format_double(*curve.hurst));
  if (curve.half_width) meta.emplace_back("half_width", std::to_string(*curve.half_width));
  if (curve.realizations) meta.emplace_back("realizations", std::to_string(*curve.realizations));
  if (curve.window_length) meta.emplace_back("window_length", format_double(*curve.window_length));
  if (curve.seed) meta.emplace_back("master_seed", std::to_string(*curve.seed));
  append(meta, extra);
  write_metadata(out, meta);
  out << "t,s,method,trunc\n";
  const std::string method(to_string(curve.method));
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    out << format_double(curve.t[i]) << ',' << format_double(curve.s[i]) << ',' << method << ','
        << format_double(curve.trunc[i]) << '\n';
  }
}

StructureFactorCurve read_spectrum_csv(std::istream& in) {
  const CsvTable csv = read_csv(in);
  StructureFactorCurve curve;
  curve.t = csv.numeric_column("t");
  curve.s = csv.numeric_column("s");
  curve.trunc = csv.numeric_column("trunc");
  const std::size_t mc = csv.column("method");
  std::optional<std::string> method = csv.meta("method");
  if (!csv.rows.empty()) method = csv.rows.front()[mc];
  if (method) {
    const auto parsed = parse_spectrum_method(*method);
    if (!parsed) throw MalformedInput("unknown spectrum method '" + *method + "'");
    curve.method = *parsed;
  }
  if (auto h = csv.meta("h")) curve.hurst = parse_double(*h);
  curve.half_width = parse_int(csv.meta("half_width"));
  if (auto m = parse_uint(csv.meta("realizations"))) curve.realizations = *m;
  if (auto l = csv.meta("window_length")) curve.window_length = parse_double(*l);
  curve.seed = parse_uint(csv.meta("master_seed"));
  return curve;
}

void write_mixing_csv(std::ostream& out, const MixingCurve& curve, const CsvMetadata& extra) {
  CsvMetadata meta{{"h", format_double(curve.hurst)},
                   {"a", format_double(curve.a)},
                   {"b", format_double(curve.b)}};
  append(meta, extra);
  write_metadata(out, meta);
  out << "t,V\n";
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    out << format_double(curve.t[i]) << ',' << format_double(curve.v[i]) << '\n';
  }
}

MixingCurve read_mixing_csv(std::istream& in) {
  const CsvTable csv = read_csv(in);
  MixingCurve curve;
  curve.t = csv.numeric_column("t");
  curve.v = csv.numeric_column("V");
  if (auto h = csv.meta("h")) curve.hurst = parse_double(*h);
  if (auto a = csv.meta("a")) curve.a = parse_double(*a);
  if (auto b = csv.meta("b")) curve.b = parse_double(*b);
  return curve;
}

}  // namespace palmfbm
