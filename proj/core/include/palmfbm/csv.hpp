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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palmfbm/ergodicity.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/spectrum.hpp"
#include "palmfbm/stats.hpp"

namespace palmfbm {

/// Ordered `# key=value` header lines.
using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// Parses a full decimal field; MalformedInput on trailing garbage.
double parse_double(std::string_view text);

/// A parsed CSV file: metadata comments, column names and raw fields.
struct CsvTable {
  CsvMetadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::string> meta(std::string_view key) const;
  /// Index of `name` in columns; MalformedInput if absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> numeric_column(std::string_view name) const;
};

/// Reads `# key=value` lines, then a header row (unless `has_header` is
/// false, in which case a single column named "x" is assumed), then rows.
CsvTable read_csv(std::istream& in, bool has_header = true);
CsvTable read_csv_file(const std::string& path, bool has_header = true);

/// Metadata lines describing a configuration's provenance.
CsvMetadata describe(const PointConfiguration& config);

/// One coordinate per line after the metadata header.
void write_points_csv(std::ostream& out, const PointConfiguration& config,
                      const CsvMetadata& extra = {});
std::vector<double> read_points_csv(std::istream& in);

/// Columns r,mean_count,var_count,var_stderr.
void write_variance_csv(std::ostream& out, const RadialVarianceTable& table,
                        const CsvMetadata& extra = {});
RadialVarianceTable read_variance_csv(std::istream& in);

/// Columns t,s,method,trunc.
void write_spectrum_csv(std::ostream& out, const StructureFactorCurve& curve,
                        const CsvMetadata& extra = {});
StructureFactorCurve read_spectrum_csv(std::istream& in);

/// Columns t,V.
void write_mixing_csv(std::ostream& out, const MixingCurve& curve, const CsvMetadata& extra = {});
MixingCurve read_mixing_csv(std::istream& in);

}  // namespace palmfbm
