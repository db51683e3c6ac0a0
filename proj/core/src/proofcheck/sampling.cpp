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

#include "dlite/proofcheck/sampling.hpp"

#include <cmath>
#include <cstdio>

namespace dlite::proofcheck {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::next() {
  return mix64(mix64(seed_ ^ mix64(stream_)) + counter_++);
}

double CounterRng::uniform() {
  // 53 random bits centred in their cell, never 0 or 1.
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::exponential() { return -std::log(uniform()); }

std::vector<std::string> outcome_labels(std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "o%02zu", i);
    labels.emplace_back(buf);
  }
  return labels;
}

Distribution sample_simplex(CounterRng& rng, std::size_t dim) {
  std::vector<double> w(dim);
  for (auto& x : w) x = rng.exponential();
  return make_distribution(outcome_labels(dim), w);
}

Distribution point_mass(std::size_t dim, std::size_t index) {
  std::vector<double> w(dim, 0.0);
  w.at(index) = 1.0;
  return make_distribution(outcome_labels(dim), w);
}

}  // namespace dlite::proofcheck
