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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dlite/distribution.hpp"
#include "dlite/proofcheck/quadrature.hpp"
#include "dlite/proofcheck/report.hpp"

namespace dlite::proofcheck {

/// Pass thresholds for every verification suite.
struct Tolerances {
  double oracle = 1e-9;          // closed form vs quadrature, interior pairs
  double oracle_zero = 1e-7;     // same, pairs with a zero coordinate
  double triangle = 1e-10;       // allowed negative slack in triangle checks
  double identity_tv = 1e-6;     // pairs farther apart than this must have DL > 0
  double scaling = 1e-10;        // relative, scaling lemma
  double derivative = 1e-5;      // relative, finite differences vs printed derivatives
  double diagonal = 1e-7;        // derivatives at x == c
  double second_derivative_floor = 1e-10;
  double concavity = 1e-8;       // largest allowed positive f''
  double supremum = 1e-12;       // allowed excess of DL over 1
};

/// Square grid c = i/points, x = j/points with 1 <= i <= j <= points, and
/// the finite-difference steps used on it.
struct Grid {
  std::size_t points = 100;
  /// First differences.
  double first_step = 1e-5;
  /// Second differences of the cube-root composite; on the diagonal of dl
  /// this is scaled by c.
  double second_step = 1e-4;
  /// Off-diagonal second differences of dl use this fraction of x - c, the
  /// distance to the nearest non-smooth point. A fixed step is dominated by
  /// rounding where dl is large and its curvature small.
  double second_step_fraction = 1e-2;
};

// --- Oracle agreement ------------------------------------------------------

struct OracleOptions {
  std::size_t pairs = 2000;
  /// How many of `pairs` have one coordinate exactly 0.
  std::size_t zero_pairs = 100;
  std::uint64_t seed = 42;
  QuadratureConfig quadrature;
};

/// Closed forms against the integral definitions: LIT, both routes to the
/// discount, and DLITE, each split into interior and zero-coordinate reports.
std::vector<PropertyReport> check_oracle_agreement(const OracleOptions& opts,
                                                   const Tolerances& tol = {});

// --- Non-negativity proof: derivative chain ---------------------------------

enum class PrintedForm {
  /// -(2c^2 ln x - x^2 - 2c^2 ln c + c^2) / (2 (x + c)^2)
  kLeadingMinus,
  /// The same fraction without the leading minus.
  kNoLeadingMinus,
};

/// dl'(x, c) as printed, in either sign.
double printed_dl_prime(double x, double c, PrintedForm form);

/// dl''(x, c) = c (x^2 + 2cx ln x - 2cx ln c - c^2) / (x (x + c)^3) as printed.
double printed_dl_second(double x, double c);

enum class SignMatch { kNeither, kLeadingMinus, kNoLeadingMinus, kBoth };

struct Theorem1Result {
  SignMatch matched = SignMatch::kNeither;
  double leading_minus_max_rel_error = 0.0;
  double no_leading_minus_max_rel_error = 0.0;
  std::vector<PropertyReport> reports;
};

/// Finite differences of dl_term in x against the printed dl' (both signs)
/// and dl'', plus the sign of dl'' and the zeros on the diagonal x == c.
Theorem1Result check_theorem1_derivatives(const Grid& grid = {}, const Tolerances& tol = {});

// --- Triangle inequality proof: cube-root concavity --------------------------

/// f(x) = (m dl(x, c))^(1/3) must have f''(x) <= tolerance for c < x <= 1.
/// Besides the grid, samples x = c + near_diagonal for every c.
PropertyReport check_theorem2_concavity(const Grid& grid = {},
                                        const std::vector<double>& multipliers = {1, 2, 5},
                                        double near_diagonal = 1e-3,
                                        const Tolerances& tol = {});

// --- Metric axioms -----------------------------------------------------------

/// Smallest slack over the three orientations of the triangle inequality on
/// dlite_cbrt for the triple (p, q, r).
double triangle_slack(const Distribution& p, const Distribution& q, const Distribution& r);

/// Same for the per-outcome form, cbrt(dl(p_i, q_i)) + ... over every outcome.
double per_term_triangle_slack(const Distribution& p, const Distribution& q,
                               const Distribution& r);

/// Five reports per dimension: non-negativity, identity, symmetry, triangle
/// inequality on dlite_cbrt and its per-term form. Dimensions must lie in
/// [2, 16].
std::vector<PropertyReport> check_metric_axioms(std::size_t n_samples,
                                                const std::vector<std::size_t>& dims,
                                                std::uint64_t seed,
                                                const Tolerances& tol = {});

// --- Scaling lemma -----------------------------------------------------------

/// Relative error of dl(x p, x q) against x dl(p, q) with x log-uniform in
/// [1e-8, 1], plus the fixed cases x = 1, x = 1e-8 and (0.5, 0.25, 0.5).
PropertyReport check_scaling_lemma(std::size_t n_samples, std::uint64_t seed,
                                   const Tolerances& tol = {});

// --- Boundedness -------------------------------------------------------------

struct SupremumResult {
  PropertyReport report;
  double max_random = 0.0;   // best value among the random pairs
  double max_found = 0.0;    // best value after coordinate ascent
  std::size_t dim = 0;
  std::vector<double> p;     // maximizer
  std::vector<double> q;
};

/// Random simplex pairs followed by coordinate ascent from the best few.
/// Passes when no pair exceeds 1 + tolerance.
SupremumResult search_supremum(std::size_t n_samples, const std::vector<std::size_t>& dims,
                               std::uint64_t seed, const Tolerances& tol = {});

/// DLITE of (1 - e, e) against (1, 0) stays <= 1 for e in {1e-3, 1e-6, 1e-9}
/// while KL on the same pairs is undefined; KL of (1/2, 1/2) against
/// (1 - e, e) grows without bound as e shrinks while DLITE stays <= 1.
PropertyReport check_kl_contrast(const Tolerances& tol = {});

// --- Everything --------------------------------------------------------------

struct VerifyOptions {
  std::size_t samples = 10000;
  std::vector<std::size_t> dims{2, 3, 4, 8};
  std::uint64_t seed = 42;
  Tolerances tolerances;
  Grid grid;
  OracleOptions oracle;
};

/// Runs every suite in a fixed order. Throws Error(kDomainError) for zero
/// samples or dimensions outside [2, 16].
std::vector<PropertyReport> run_all(const VerifyOptions& opts);

}  // namespace dlite::proofcheck
