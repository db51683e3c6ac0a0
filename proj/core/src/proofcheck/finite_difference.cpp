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

#include "dlite/proofcheck/finite_difference.hpp"

#include "dlite/error.hpp"

namespace dlite::proofcheck {

double central_first(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double central_second(const std::function<double(double)>& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
         (12 * h * h);
}

double one_sided_first(const std::function<double(double)>& f, double x, double h,
                       Stencil side) {
  const double s = side == Stencil::kBackward ? -h : h;
  return (-25 * f(x) + 48 * f(x + s) - 36 * f(x + 2 * s) + 16 * f(x + 3 * s) -
          3 * f(x + 4 * s)) /
         (12 * s);
}

double one_sided_second(const std::function<double(double)>& f, double x, double h,
                        Stencil side) {
  const double s = side == Stencil::kBackward ? -h : h;
  return (45 * f(x) - 154 * f(x + s) + 214 * f(x + 2 * s) - 156 * f(x + 3 * s) +
          61 * f(x + 4 * s) - 10 * f(x + 5 * s)) /
         (12 * s * s);
}

DerivativeEstimate derivative(const std::function<double(double)>& f, double x, int order,
                              double h, double lo, double hi, double edge_margin,
                              double one_sided_scale) {
  if (order != 1 && order != 2) {
    throw Error(ErrorCode::kDomainError, "only first and second derivatives are supported");
  }
  Stencil stencil = Stencil::kCentral;
  const bool near_lo = x - 2 * h < lo + edge_margin;
  const bool near_hi = x + 2 * h > hi - edge_margin;
  if (near_lo || near_hi) {
    h *= one_sided_scale;
    const bool forward_fits = x >= lo && x + 5 * h <= hi;
    const bool backward_fits = x <= hi && x - 5 * h >= lo;
    if (near_lo && forward_fits) {
      stencil = Stencil::kForward;
    } else if (backward_fits) {
      stencil = Stencil::kBackward;
    } else if (forward_fits) {
      stencil = Stencil::kForward;
    } else {
      throw Error(ErrorCode::kDomainError, "interval too narrow for a one-sided stencil");
    }
  }

  auto estimate = [&](double step) {
    if (stencil == Stencil::kCentral) {
      return order == 1 ? central_first(f, x, step) : central_second(f, x, step);
    }
    return order == 1 ? one_sided_first(f, x, step, stencil)
                      : one_sided_second(f, x, step, stencil);
  };
  // Every stencil above is fourth order, so one Richardson level removes the
  // h^4 term.
  const double coarse = estimate(h);
  const double fine = estimate(0.5 * h);
  return {fine + (fine - coarse) / 15.0, stencil};
}

}  // namespace dlite::proofcheck
