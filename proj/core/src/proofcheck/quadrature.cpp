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

#include "dlite/proofcheck/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "dlite/error.hpp"

namespace dlite::proofcheck {
namespace {

constexpr int kMaxDepth = 200;

struct Panel {
  double a, b, fa, fm, fb, whole;
};

class Simpson {
 public:
  Simpson(const std::function<double(double)>& f, const QuadratureConfig& cfg)
      : f_(f), budget_(cfg.subdivisions) {}

  double run(double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f_(a), fm = f_(m), fb = f_(b);
    return refine({a, b, fa, fm, fb, estimate(a, b, fa, fm, fb)}, tol, 0);
  }

 private:
  static double estimate(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double refine(const Panel& p, double tol, int depth) {
    if (++panels_ > budget_) {
      throw Error(ErrorCode::kQuadratureNonConvergence,
                  "adaptive Simpson exceeded its panel budget");
    }
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
    const double flm = f_(lm), frm = f_(rm);
    const double left = estimate(p.a, m, p.fa, flm, p.fm);
    const double right = estimate(m, p.b, p.fm, frm, p.fb);
    const double diff = left + right - p.whole;
    // Width floor: panels this narrow cannot be split further in doubles.
    if (std::abs(diff) <= 15.0 * tol || depth >= kMaxDepth || !(lm > p.a && rm < p.b)) {
      return left + right + diff / 15.0;
    }
    return refine({p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1) +
           refine({m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1);
  }

  const std::function<double(double)>& f_;
  std::size_t budget_;
  std::size_t panels_ = 0;
};

void check_interval(double a, double b) {
  if (!(a >= 0.0) || !(b >= a) || !std::isfinite(b)) {
    throw Error(ErrorCode::kDomainError, "integration interval must satisfy 0 <= a <= b");
  }
}

// Guarded integration of a log-singular integrand: the part of [a, b] below
// the guard uses `tail` (an antiderivative valid near 0), the rest is sampled.
double guarded(const std::function<double(double)>& f, double (*tail)(double), double a,
               double b, const QuadratureConfig& cfg) {
  cfg.validate();
  check_interval(a, b);
  if (a == b) return 0.0;
  const double g = cfg.singularity_guard;
  if (b <= g) return tail(b) - tail(a);
  double sum = 0.0;
  if (a < g) {
    sum += tail(g) - tail(a);
    a = g;
  }
  Simpson s(f, cfg);
  return sum + s.run(a, b, cfg.abs_tol);
}

double neg_log_tail(double t) { return t == 0.0 ? 0.0 : t * (1.0 - std::log(t)); }
double neg_t_log_tail(double t) {
  return t == 0.0 ? 0.0 : 0.25 * t * t * (1.0 - 2.0 * std::log(t));
}

}  // namespace

void QuadratureConfig::validate() const {
  if (subdivisions < 16) {
    throw Error(ErrorCode::kDomainError, "quadrature panel budget must be at least 16");
  }
  if (!(abs_tol > 0.0) || !(singularity_guard > 0.0)) {
    throw Error(ErrorCode::kDomainError, "quadrature tolerances must be positive");
  }
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return 0.0;
  if (a > b) return -adaptive_simpson(f, b, a, cfg);
  Simpson s(f, cfg);
  return s.run(a, b, cfg.abs_tol);
}

double integrate_neg_log(double a, double b, const QuadratureConfig& cfg) {
  return guarded([](double t) { return -std::log(t); }, neg_log_tail, a, b, cfg);
}

double integrate_neg_t_log(double a, double b, const QuadratureConfig& cfg) {
  return guarded([](double t) { return -t * std::log(t); }, neg_t_log_tail, a, b, cfg);
}

double lit_by_quadrature(Probability p, Probability q, const QuadratureConfig& cfg) {
  const double lo = std::min<double>(p, q), hi = std::max<double>(p, q);
  return std::abs(integrate_neg_log(lo, hi, cfg));
}

double discount_by_quadrature(Probability p, Probability q, const QuadratureConfig& cfg) {
  const double lo = std::min<double>(p, q), hi = std::max<double>(p, q);
  if (lo == hi) return 0.0;
  const double num = integrate_neg_t_log(lo, hi, cfg);
  const double den = adaptive_simpson([](double t) { return t; }, lo, hi, cfg);
  return (hi - lo) * num / den;
}

double discount_by_weighted_mean(Probability p, Probability q, const QuadratureConfig& cfg) {
  const double lo = std::min<double>(p, q), hi = std::max<double>(p, q);
  if (lo == hi) return 0.0;
  // int_lo^hi t ln(1/t) dt = 1/4 int_{lo^2}^{hi^2} -ln u du
  const double weighted = 0.25 * integrate_neg_log(lo * lo, hi * hi, cfg);
  const double weight = adaptive_simpson([](double t) { return t; }, lo, hi, cfg);
  return (hi - lo) * (weighted / weight);
}

double dl_by_quadrature(Probability p, Probability q, const QuadratureConfig& cfg) {
  return lit_by_quadrature(p, q, cfg) - discount_by_quadrature(p, q, cfg);
}

}  // namespace dlite::proofcheck
