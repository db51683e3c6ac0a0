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

#include "dlite/distance_matrix.hpp"

#include <array>
#include <utility>

#include "dlite/baselines.hpp"
#include "dlite/error.hpp"
#include "dlite/measure.hpp"

namespace dlite {
namespace {

constexpr std::array<std::pair<MeasureKind, std::string_view>, 7> kNames{{
    {MeasureKind::kDlite, "dlite"},
    {MeasureKind::kDliteCbrt, "dlite-cbrt"},
    {MeasureKind::kLit, "lit"},
    {MeasureKind::kDeltaH, "delta-h"},
    {MeasureKind::kKl, "kl"},
    {MeasureKind::kJsd, "jsd"},
    {MeasureKind::kTv, "tv"},
}};

}  // namespace

std::string_view to_string(MeasureKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_symmetric(MeasureKind kind) { return kind != MeasureKind::kKl; }

double measure(MeasureKind kind, const Distribution& p, const Distribution& q) {
  switch (kind) {
    case MeasureKind::kDlite: return dlite(p, q).total;
    case MeasureKind::kDliteCbrt: return dlite_cbrt(p, q);
    case MeasureKind::kLit: return lit(p, q).total;
    case MeasureKind::kDeltaH: return delta_h(p, q).total;
    case MeasureKind::kKl: return kl(p, q);
    case MeasureKind::kJsd: return jsd(p, q);
    case MeasureKind::kTv: return tv(p, q);
  }
  throw Error(ErrorCode::kInternalConsistency, "unhandled measure kind");
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (values_.size() != labels_.size() * labels_.size()) {
    throw Error(ErrorCode::kLengthMismatch, "distance matrix shape does not match labels");
  }
}

DistanceMatrix distance_matrix(std::span<const NamedDistribution> ds, MeasureKind kind) {
  const std::size_t n = ds.size();
  if (n == 0) {
    throw Error(ErrorCode::kLengthMismatch, "distance matrix needs at least one distribution");
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& d : ds) labels.push_back(d.name);

  std::vector<double> values(n * n, 0.0);
  const bool symmetric = is_symmetric(kind);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j) continue;
      const double v = measure(kind, ds[i].distribution, ds[j].distribution);
      values[i * n + j] = v;
      if (symmetric) values[j * n + i] = v;
    }
  }
  return DistanceMatrix(std::move(labels), std::move(values));
}

DistanceMatrix distance_matrix(std::span<const Distribution> ds, MeasureKind kind) {
  std::vector<NamedDistribution> named;
  named.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) named.push_back({std::to_string(i), ds[i]});
  return distance_matrix(std::span<const NamedDistribution>(named), kind);
}

}  // namespace dlite
