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

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dlite {

/// Mass-sum tolerance for a normalized distribution.
inline constexpr double kMassSumTolerance = 1e-9;

/// A probability in [0, 1]. Construction from an out-of-range or non-finite
/// value throws Error(kDomainError); the conversion is implicit so closed-form
/// functions can be called with plain doubles.
class Probability {
 public:
  constexpr Probability() = default;
  Probability(double value);  // NOLINT(google-explicit-constructor)

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }  // NOLINT

 private:
  double value_ = 0.0;
};

/// Finite probability mass function over labeled outcomes. Immutable once
/// built; masses are non-negative and sum to 1 within kMassSumTolerance.
class Distribution {
 public:
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const double> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

  /// Mass of `label`, or 0 if the outcome is absent.
  double mass(const std::string& label) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  friend Distribution make_distribution(std::vector<std::string> labels,
                                        std::span<const double> weights);
  friend std::pair<Distribution, Distribution> align(const Distribution& p,
                                                     const Distribution& q);
  friend Distribution smooth(const Distribution& p, double epsilon);

  Distribution(std::vector<std::string> labels, std::vector<double> masses)
      : labels_(std::move(labels)), masses_(std::move(masses)) {}

  std::vector<std::string> labels_;
  std::vector<double> masses_;
};

struct NamedDistribution {
  std::string name;
  Distribution distribution;
};

/// Normalizes `weights` to unit mass. Throws Error with kLengthMismatch,
/// kNonFiniteInput, kNegativeWeight, kDuplicateLabel or kAllZero.
Distribution make_distribution(std::vector<std::string> labels,
                               std::span<const double> weights);

inline Distribution make_distribution(std::vector<std::string> labels,
                                      std::initializer_list<double> weights) {
  return make_distribution(std::move(labels),
                           std::span<const double>(weights.begin(), weights.size()));
}

/// Re-expresses both distributions over the lexicographically sorted union of
/// their labels; outcomes missing from one side get mass exactly 0.
std::pair<Distribution, Distribution> align(const Distribution& p,
                                            const Distribution& q);

/// Additive smoothing: (m + epsilon) / (1 + n * epsilon).
Distribution smooth(const Distribution& p, double epsilon);

}  // namespace dlite
