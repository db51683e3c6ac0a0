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

#include "dlite/distribution.hpp"

namespace dlite {

// Reference divergences, in nats. Arguments are aligned first.

/// Kullback-Leibler divergence sum p ln(p/q) with 0 ln(0/q) = 0. Throws
/// Error(kKlUndefined) when some outcome has p > 0 and q = 0; smooth() the
/// second argument to opt out.
double kl(const Distribution& p, const Distribution& q);

/// Jensen-Shannon divergence against the midpoint; always defined, in
/// [0, ln 2]. Its square root is a metric.
double jsd(const Distribution& p, const Distribution& q);

/// Total variation distance, half the L1 distance.
double tv(const Distribution& p, const Distribution& q);

}  // namespace dlite
