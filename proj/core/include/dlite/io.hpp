// Copyright 2026 The dlite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string_view>
#include <vector>

#include "dlite/distribution.hpp"

namespace dlite::io {

enum class Format { kCsv, kJson };

std::optional<Format> parse_format(std::string_view name);

/// Picks the format from a ".csv" or ".json" extension.
std::optional<Format> format_from_extension(const std::filesystem::path& path);

/// One distribution per row. The header row holds outcome labels after a
/// leading name column; each later row is a name followed by weights. Empty
/// cells read as 0. Rows are renormalized. Errors name the offending row and
/// column.
std::vector<NamedDistribution> read_csv(std::istream& in);

/// An array of {"name": string, "masses": {label: weight}} objects.
std::vector<NamedDistribution> read_json(std::istream& in);

/// Reads `path`, inferring the format from the extension when not given.
std::vector<NamedDistribution> load_distributions(const std::filesystem::path& path,
                                                  std::optional<Format> format = std::nullopt);

}  // namespace dlite::io
