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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace palmfbm::cli {

/// Record of one run, written next to its outputs as `<stem>.manifest.json`.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t master_seed = 0;
  std::string tool_version;
  std::string timestamp;
  std::vector<std::string> output_files;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::string to_json(const RunManifest& manifest);

/// `path` with its extension replaced by `suffix` (e.g. ".manifest.json").
std::string sibling_path(const std::string& path, const std::string& suffix);

}  // namespace palmfbm::cli
