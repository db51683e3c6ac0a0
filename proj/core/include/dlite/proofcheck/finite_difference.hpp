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

#include <functional>

namespace dlite::proofcheck {

enum class Stencil { kCentral, kForward, kBackward };

/// Fourth-order five-point central differences.
double central_first(const std::function<double(double)>& f, double x, double h);
double central_second(const std::function<double(double)>& f, double x, double h);

/// Fourth-order one-sided differences; kBackward uses points x, x-h, ...
double one_sided_first(const std::function<double(double)>& f, double x, double h,
                       Stencil side);
double one_sided_second(const std::function<double(double)>& f, double x, double h,
                        Stencil side);

struct DerivativeEstimate {
  double value;
  Stencil stencil;
};

/// Derivative of order 1 or 2 of f at x, where f is smooth on [lo, hi].
/// Uses the central stencil with one Richardson level (h and h/2) when every
/// sample stays at least `edge_margin` inside the interval, otherwise a
/// one-sided stencil pointing into it, with its step multiplied by
/// `one_sided_scale` (one-sided stencils amplify rounding more).
DerivativeEstimate derivative(const std::function<double(double)>& f, double x, int order,
                              double h, double lo, double hi, double edge_margin = 0.0,
                              double one_sided_scale = 1.0);

}  // namespace dlite::proofcheck
