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
#include <functional>

#include "dlite/distribution.hpp"

namespace dlite::proofcheck {

struct QuadratureConfig {
  /// Panel budget for one adaptive integration; exceeding it throws
  /// Error(kQuadratureNonConvergence). Must be at least 16.
  std::size_t subdivisions = 1'000'000;
  /// Absolute error target for the whole interval.
  double abs_tol = 1e-13;
  /// Below this cutoff the log-singular integrands are integrated
  /// analytically instead of sampled.
  double singularity_guard = 1e-14;

  /// Throws Error(kDomainError) on a non-positive tolerance or a budget
  /// under 16 panels.
  void validate() const;
};

/// Adaptive Simpson with one Richardson correction per accepted panel.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg);

/// Integral of -ln t over [a, b], 0 <= a <= b.
double integrate_neg_log(double a, double b, const QuadratureConfig& cfg);

/// Integral of -t ln t over [a, b], 0 <= a <= b.
double integrate_neg_t_log(double a, double b, const QuadratureConfig& cfg);

/// LIT term from its integral definition: |int_p^q -ln t dt|.
double lit_by_quadrature(Probability p, Probability q, const QuadratureConfig& cfg = {});

/// Entropy discount from its integral definition:
/// |p - q| * (int_p^q -t ln t dt) / (int_p^q t dt), zero when p == q.
double discount_by_quadrature(Probability p, Probability q, const QuadratureConfig& cfg = {});

/// Same discount restated as |p - q| times the t-weighted mean of ln(1/t),
/// with the mean evaluated through the substitution u = t^2 so that only the
/// -ln u integrator is used. An independent numerical route to the same value.
double discount_by_weighted_mean(Probability p, Probability q,
                                 const QuadratureConfig& cfg = {});

/// DLITE term from the two integrals.
double dl_by_quadrature(Probability p, Probability q, const QuadratureConfig& cfg = {});

}  // namespace dlite::proofcheck
