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

#include "dlite/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "dlite/error.hpp"

namespace dlite::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits one CSV record; double quotes group fields and "" escapes a quote.
std::vector<std::string> split_record(std::string_view line, std::size_t row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kParseError, "row " + std::to_string(row) + ": unterminated quote");
  }
  for (auto& f : fields) f = std::string(trim(f));
  return fields;
}

std::string where(std::size_t row, const std::string& column) {
  return "row " + std::to_string(row) + ", column '" + column + "'";
}

double parse_weight(std::string_view cell, std::size_t row, const std::string& column) {
  if (cell.empty()) return 0.0;
  double value = 0.0;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw Error(ErrorCode::kParseError,
                where(row, column) + ": cannot parse '" + std::string(cell) + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFiniteInput, where(row, column) + ": weight is not finite");
  }
  if (value < 0.0) {
    throw Error(ErrorCode::kNegativeWeight, where(row, column) + ": weight is negative");
  }
  return value;
}

void require_unique_names(const std::vector<NamedDistribution>& ds) {
  std::set<std::string_view> seen;
  for (const auto& d : ds) {
    if (!seen.insert(d.name).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate distribution name '" + d.name + "'");
    }
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::optional<Format> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".csv") return Format::kCsv;
  if (ext == ".json") return Format::kJson;
  return std::nullopt;
}

std::vector<NamedDistribution> read_csv(std::istream& in) {
  std::string line;
  std::size_t row = 0;
  std::vector<std::string> labels;
  std::vector<NamedDistribution> out;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split_record(line, row);
    if (labels.empty()) {
      if (fields.size() < 2) {
        throw Error(ErrorCode::kParseError,
                    "row " + std::to_string(row) + ": header needs a name column and at least one outcome");
      }
      labels.assign(fields.begin() + 1, fields.end());
      continue;
    }
    if (fields.size() > labels.size() + 1) {
      throw Error(ErrorCode::kLengthMismatch,
                  "row " + std::to_string(row) + ": " + std::to_string(fields.size() - 1) +
                      " weights for " + std::to_string(labels.size()) + " outcomes");
    }
    fields.resize(labels.size() + 1);
    std::vector<double> weights(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c) {
      weights[c] = parse_weight(fields[c + 1], row, labels[c]);
    }
    try {
      out.push_back({fields[0], make_distribution(labels, weights)});
    } catch (const Error& e) {
      throw Error(e.code(), "row " + std::to_string(row) + " ('" + fields[0] + "'): " + e.what());
    }
  }
  if (labels.empty()) throw Error(ErrorCode::kParseError, "CSV input has no header row");
  if (out.empty()) throw Error(ErrorCode::kParseError, "CSV input has no distributions");
  require_unique_names(out);
  return out;
}

std::vector<NamedDistribution> read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::kParseError, "JSON input must be an array");

  std::vector<NamedDistribution> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string at = "entry " + std::to_string(i);
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
      throw Error(ErrorCode::kParseError, at + ": expected an object with a string \"name\"");
    }
    const std::string name = item["name"].get<std::string>();
    if (!item.contains("masses") || !item["masses"].is_object()) {
      throw Error(ErrorCode::kParseError, at + " ('" + name + "'): \"masses\" must be an object");
    }
    std::vector<std::string> labels;
    std::vector<double> weights;
    for (const auto& [label, value] : item["masses"].items()) {
      if (!value.is_number()) {
        throw Error(ErrorCode::kParseError,
                    at + " ('" + name + "'), outcome '" + label + "': weight is not a number");
      }
      labels.push_back(label);
      weights.push_back(value.get<double>());
    }
    try {
      out.push_back({name, make_distribution(std::move(labels), weights)});
    } catch (const Error& e) {
      throw Error(e.code(), at + " ('" + name + "'): " + e.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, "JSON input has no distributions");
  require_unique_names(out);
  return out;
}

std::vector<NamedDistribution> load_distributions(const std::filesystem::path& path,
                                                  std::optional<Format> format) {
  if (!format) format = format_from_extension(path);
  if (!format) {
    throw Error(ErrorCode::kParseError,
                "cannot infer format of '" + path.string() + "'; pass --format csv|json");
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path.string() + "'");
  return *format == Format::kCsv ? read_csv(in) : read_json(in);
}

}  // namespace dlite::io
