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

#include "dlite/proofcheck/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace dlite::proofcheck {

PropertyTracker::PropertyTracker(std::string name, PropertyKind kind, double tolerance,
                                 std::uint64_t seed)
    : name_(std::move(name)),
      kind_(kind),
      tolerance_(tolerance),
      seed_(seed),
      worst_(kind == PropertyKind::kEquality ? 0.0 : std::numeric_limits<double>::infinity()) {}

bool PropertyTracker::is_worse(double value) const {
  if (std::isnan(value)) return !std::isnan(worst_);
  if (std::isnan(worst_)) return false;
  return kind_ == PropertyKind::kEquality ? std::abs(value) > std::abs(worst_) : value < worst_;
}

void PropertyTracker::fail(std::string why) {
  if (forced_failure_.empty()) forced_failure_ = std::move(why);
}

PropertyReport PropertyTracker::report() const {
  PropertyReport r;
  r.property_name = name_;
  r.samples = samples_;
  r.worst_violation = worst_;
  r.worst_case_inputs = inputs_;
  r.seed = seed_;
  switch (kind_) {
    case PropertyKind::kInequality: r.passed = worst_ >= -tolerance_; break;
    case PropertyKind::kEquality: r.passed = std::abs(worst_) <= tolerance_; break;
    case PropertyKind::kStrictlyPositive: r.passed = worst_ > 0.0; break;
  }
  if (samples_ == 0) r.passed = false;
  if (!forced_failure_.empty()) {
    r.passed = false;
    r.worst_case_inputs = forced_failure_ + (inputs_.empty() ? "" : "; " + inputs_);
  }
  return r;
}

std::string to_json(const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["property_name"] = report.property_name;
  j["samples"] = report.samples;
  j["worst_violation"] = report.worst_violation;
  j["worst_case_inputs"] = report.worst_case_inputs;
  j["passed"] = report.passed;
  j["seed"] = report.seed;
  return j.dump();
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace dlite::proofcheck
