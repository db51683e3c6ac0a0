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

#include <map>
#include <string>

#include "dlite/distribution.hpp"

namespace dlite {

// Per-outcome closed forms. Every function throws Error(kDomainError) when an
// argument lies outside [0, 1] or is not finite. Zero mass takes the
// continuous limit: phi(0) = psi(0) = 0 and delta_h_term(0, 0) = 0.

/// p (1 - ln p), the antiderivative term of -ln t.
double phi(Probability p);

/// p^2 (1 - 2 ln p).
double psi(Probability p);

/// Per-outcome LIT term |phi(p) - phi(q)|.
double g_term(Probability p, Probability q);

/// Per-outcome entropy discount |psi(p) - psi(q)| / (2 (p + q)).
double delta_h_term(Probability p, Probability q);

/// Per-outcome DLITE term g_term - delta_h_term. Non-negative, symmetric
/// bit-for-bit, and zero exactly when p == q.
double dl_term(Probability p, Probability q);

struct TermBreakdown {
  double g = 0.0;
  double delta = 0.0;
  double dl = 0.0;
};

/// All three per-outcome terms evaluated from one ordered operand pair.
TermBreakdown term_breakdown(Probability p, Probability q);

struct MeasureResult {
  double total = 0.0;
  std::map<std::string, TermBreakdown> per_outcome;
};

// Distribution-level measures. Arguments are aligned onto the union of their
// supports first, so label order and missing outcomes do not matter.

MeasureResult lit(const Distribution& p, const Distribution& q);
MeasureResult delta_h(const Distribution& p, const Distribution& q);
MeasureResult dlite(const Distribution& p, const Distribution& q);

/// Cube root of the summed DLITE total; this is the form that satisfies the
/// triangle inequality.
double dlite_cbrt(const Distribution& p, const Distribution& q);

}  // namespace dlite
