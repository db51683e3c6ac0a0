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
#include <limits>
#include <string>

namespace dlite::proofcheck {

enum class PropertyKind {
  /// worst_violation is the smallest slack seen; passes when >= -tolerance.
  kInequality,
  /// worst_violation is the largest error seen; passes when |.| <= tolerance.
  kEquality,
  /// worst_violation is the smallest value seen; passes when > 0.
  kStrictlyPositive,
};

struct PropertyReport {
  std::string property_name;
  std::uint64_t samples = 0;
  double worst_violation = 0.0;
  std::string worst_case_inputs;
  bool passed = false;
  std::uint64_t seed = 0;
};

/// Tracks the worst sample of one property while a check runs.
class PropertyTracker {
 public:
  PropertyTracker(std::string name, PropertyKind kind, double tolerance, std::uint64_t seed);

  /// Feeds one sample: a slack (kInequality, kStrictlyPositive) or an error
  /// magnitude (kEquality). `describe` is only invoked when the sample
  /// becomes the new worst case.
  template <typename Describe>
  void observe(double value, Describe&& describe) {
    ++samples_;
    if (is_worse(value)) {
      worst_ = value;
      inputs_ = describe();
    }
  }

  /// Forces failure regardless of the observed values, e.g. when a side
  /// condition of the property does not hold.
  void fail(std::string why);

  PropertyReport report() const;

 private:
  bool is_worse(double value) const;

  std::string name_;
  PropertyKind kind_;
  double tolerance_;
  std::uint64_t seed_;
  std::uint64_t samples_ = 0;
  double worst_;
  std::string inputs_;
  std::string forced_failure_;
};

/// One-line JSON object with the fields in declaration order.
std::string to_json(const PropertyReport& report);

/// Formats with 17 significant digits.
std::string fmt_double(double v);

}  // namespace dlite::proofcheck
