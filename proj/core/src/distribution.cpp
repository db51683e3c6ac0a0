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

#include "dlite/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dlite/error.hpp"

namespace dlite {

Probability::Probability(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "probability out of [0,1]: " << value;
    throw Error(ErrorCode::kDomainError, os.str());
  }
}

double Distribution::mass(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? 0.0 : masses_[it - labels_.begin()];
}

Distribution make_distribution(std::vector<std::string> labels,
                               std::span<const double> weights) {
  if (labels.size() != weights.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "label count " + std::to_string(labels.size()) +
                    " does not match weight count " + std::to_string(weights.size()));
  }
  if (labels.empty()) {
    throw Error(ErrorCode::kAllZero, "distribution has no outcomes");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      throw Error(ErrorCode::kNonFiniteInput,
                  "non-finite weight for outcome '" + labels[i] + "'");
    }
    if (weights[i] < 0.0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "negative weight for outcome '" + labels[i] + "'");
    }
    sum += weights[i];
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate outcome label '" + label + "'");
    }
  }
  if (sum <= 0.0) {
    throw Error(ErrorCode::kAllZero, "all weights are zero");
  }
  if (!std::isfinite(sum)) {
    throw Error(ErrorCode::kNonFiniteInput, "weight sum overflows");
  }

  std::vector<double> masses(weights.size());
  std::transform(weights.begin(), weights.end(), masses.begin(),
                 [sum](double w) { return w / sum; });
  return Distribution(std::move(labels), std::move(masses));
}

std::pair<Distribution, Distribution> align(const Distribution& p,
                                            const Distribution& q) {
  std::vector<std::string> labels(p.labels_);
  labels.insert(labels.end(), q.labels_.begin(), q.labels_.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto project = [&labels](const Distribution& d) {
    std::vector<std::size_t> order(d.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&d](std::size_t a, std::size_t b) {
      return d.labels_[a] < d.labels_[b];
    });
    std::vector<double> masses(labels.size(), 0.0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < labels.size() && k < order.size(); ++i) {
      if (labels[i] == d.labels_[order[k]]) masses[i] = d.masses_[order[k++]];
    }
    return Distribution(labels, std::move(masses));
  };
  return {project(p), project(q)};
}

Distribution smooth(const Distribution& p, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kNonPositiveEpsilon, "smoothing epsilon must be positive");
  }
  const double denom = 1.0 + static_cast<double>(p.size()) * epsilon;
  std::vector<double> masses(p.size());
  std::transform(p.masses_.begin(), p.masses_.end(), masses.begin(),
                 [&](double m) { return std::min(1.0, (m + epsilon) / denom); });
  return Distribution(p.labels_, std::move(masses));
}

}  // namespace dlite
