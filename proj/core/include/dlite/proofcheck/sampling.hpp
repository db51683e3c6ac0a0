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
#include <string>
#include <vector>

#include "dlite/distribution.hpp"

namespace dlite::proofcheck {

/// Counter-based generator: the i-th draw is a pure function of
/// (seed, stream, i), so samples can be regenerated in any order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next();
  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  double exponential();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Outcome labels "o00", "o01", ... which sort in index order.
std::vector<std::string> outcome_labels(std::size_t dim);

/// Symmetric Dirichlet(1) draw, i.e. uniform on the simplex, by normalizing
/// exponential variates.
Distribution sample_simplex(CounterRng& rng, std::size_t dim);

/// Point mass on outcome `index`.
Distribution point_mass(std::size_t dim, std::size_t index);

}  // namespace dlite::proofcheck
