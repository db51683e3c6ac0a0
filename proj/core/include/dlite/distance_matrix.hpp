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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlite/distribution.hpp"

namespace dlite {

enum class MeasureKind { kDlite, kDliteCbrt, kLit, kDeltaH, kKl, kJsd, kTv };

std::string_view to_string(MeasureKind kind);

/// Parses the command-line spelling ("dlite", "dlite-cbrt", "lit", "delta-h",
/// "kl", "jsd", "tv").
std::optional<MeasureKind> parse_measure_kind(std::string_view name);

/// Everything except KL.
bool is_symmetric(MeasureKind kind);

/// Scalar value of `kind` between two distributions.
double measure(MeasureKind kind, const Distribution& p, const Distribution& q);

/// Square matrix of pairwise values with row/column labels, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> values);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  double operator()(std::size_t row, std::size_t col) const {
    return values_[row * labels_.size() + col];
  }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

/// M[i][j] = measure(ds[i], ds[j]) with an exactly zero diagonal. Symmetric
/// kinds evaluate the upper triangle and mirror it. Throws Error(kKlUndefined)
/// for kl when a support violation is hit; requires at least one input.
DistanceMatrix distance_matrix(std::span<const NamedDistribution> ds, MeasureKind kind);

/// Same, labeling rows by index.
DistanceMatrix distance_matrix(std::span<const Distribution> ds, MeasureKind kind);

}  // namespace dlite
