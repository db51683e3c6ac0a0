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

#include "dlite/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dlite/error.hpp"

namespace dlite {
namespace {

// Largest disagreement tolerated between g - delta and the direct dl form.
constexpr double kConsistencyTolerance = 1e-12;

struct Ordered {
  double hi;
  double lo;
};

// Operands sorted by magnitude so every per-outcome term is symmetric by
// construction.
Ordered order(Probability p, Probability q) {
  return p.value() >= q.value() ? Ordered{p, q} : Ordered{q, p};
}

// sinh(v) - v for 0 <= v < 1 by its Taylor series.
double sinh_minus_identity(double v) {
  const double v2 = v * v;
  double term = v * v2 / 6.0;
  double sum = term;
  for (int k = 2; k < 20; ++k) {
    term *= v2 / static_cast<double>((2 * k) * (2 * k + 1));
    sum += term;
    if (term <= sum * 1e-18) break;
  }
  return sum;
}

// dl(hi, lo) = (hi^2 - lo^2 - 2 hi lo ln(hi/lo)) / (2 (hi + lo))
//            = hi lo (sinh v - v) / (hi + lo),  v = ln(hi / lo).
// The series branch keeps full relative precision as hi -> lo, where the
// g - delta difference cancels to nothing.
double dl_ordered(double hi, double lo) {
  if (hi == lo) return 0.0;
  if (lo == 0.0) return 0.5 * hi;
  const double ratio = (hi - lo) / lo;
  if (ratio < 1.7) {
    return (hi / (hi + lo)) * lo * sinh_minus_identity(std::log1p(ratio));
  }
  const double v = std::log(hi) - std::log(lo);
  return ((hi - lo) * (hi + lo) - 2.0 * hi * lo * v) / (2.0 * (hi + lo));
}

template <typename Term>
MeasureResult accumulate(const Distribution& p, const Distribution& q, Term term) {
  const auto [pa, qa] = align(p, q);
  MeasureResult result;
  const auto pm = pa.masses();
  const auto qm = qa.masses();
  for (std::size_t i = 0; i < pm.size(); ++i) {
    const TermBreakdown t = term_breakdown(pm[i], qm[i]);
    result.total += term(t);
    result.per_outcome.emplace(pa.labels()[i], t);
  }
  return result;
}

}  // namespace

double phi(Probability p) {
  const double x = p.value();
  return x == 0.0 ? 0.0 : x * (1.0 - std::log(x));
}

double psi(Probability p) {
  const double x = p.value();
  return x == 0.0 ? 0.0 : x * x * (1.0 - 2.0 * std::log(x));
}

double g_term(Probability p, Probability q) {
  const auto [hi, lo] = order(p, q);
  return hi == lo ? 0.0 : std::abs(phi(hi) - phi(lo));
}

double delta_h_term(Probability p, Probability q) {
  const auto [hi, lo] = order(p, q);
  if (hi == lo) return 0.0;
  return std::abs(psi(hi) - psi(lo)) / (2.0 * (hi + lo));
}

TermBreakdown term_breakdown(Probability p, Probability q) {
  const auto [hi, lo] = order(p, q);
  TermBreakdown t{g_term(hi, lo), delta_h_term(hi, lo), dl_ordered(hi, lo)};
  if (std::abs((t.g - t.delta) - t.dl) > kConsistencyTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "dl(" << hi << ", " << lo << ") = " << t.dl << " disagrees with g - delta = "
       << (t.g - t.delta);
    throw Error(ErrorCode::kInternalConsistency, os.str());
  }
  return t;
}

double dl_term(Probability p, Probability q) { return term_breakdown(p, q).dl; }

MeasureResult lit(const Distribution& p, const Distribution& q) {
  return accumulate(p, q, [](const TermBreakdown& t) { return t.g; });
}

MeasureResult delta_h(const Distribution& p, const Distribution& q) {
  return accumulate(p, q, [](const TermBreakdown& t) { return t.delta; });
}

MeasureResult dlite(const Distribution& p, const Distribution& q) {
  return accumulate(p, q, [](const TermBreakdown& t) { return t.dl; });
}

double dlite_cbrt(const Distribution& p, const Distribution& q) {
  return std::cbrt(dlite(p, q).total);
}

}  // namespace dlite
