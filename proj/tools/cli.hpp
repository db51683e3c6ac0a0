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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlite/distance_matrix.hpp"
#include "dlite/io.hpp"

namespace dlite::cli {

enum class Subcommand { kDist, kPair, kVerify };

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kUsageError = 2,
  kMeasureUndefined = 3,
};

struct CliConfig {
  Subcommand subcommand = Subcommand::kVerify;
  std::filesystem::path input_path;
  std::optional<io::Format> format;
  MeasureKind measure = MeasureKind::kDliteCbrt;
  std::optional<double> smooth_epsilon;
  std::optional<std::filesystem::path> output_path;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  std::vector<std::size_t> dims{2, 3, 4, 8};
  /// key=value overrides of proofcheck::Tolerances, e.g. "triangle" -> 1e-12.
  std::map<std::string, double> tolerances;
  std::string name_a;
  std::string name_b;
};

/// Pairwise matrix as CSV; names in the header row and first column, cells
/// with 12 significant digits.
int run_dist(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Every measure between two named distributions as one JSON object.
int run_pair(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// All verification suites, one JSON report per line.
int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; writes to --output when given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Formats with 12 significant digits.
std::string format_cell(double v);

}  // namespace dlite::cli
