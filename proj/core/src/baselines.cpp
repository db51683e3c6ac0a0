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

#include "dlite/baselines.hpp"

#include <cmath>

#include "dlite/error.hpp"

namespace dlite {
namespace {

double xlogx_ratio(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(x / y); }

}  // namespace

double kl(const Distribution& p, const Distribution& q) {
  const auto [pa, qa] = align(p, q);
  const auto pm = pa.masses();
  const auto qm = qa.masses();
  double sum = 0.0;
  for (std::size_t i = 0; i < pm.size(); ++i) {
    if (pm[i] > 0.0 && qm[i] == 0.0) {
      throw Error(ErrorCode::kKlUndefined,
                  "KL undefined: outcome '" + pa.labels()[i] +
                      "' has positive mass in p and zero mass in q");
    }
    sum += xlogx_ratio(pm[i], qm[i]);
  }
  // Gibbs: rounding can leave a tiny negative sum for near-identical inputs.
  return sum < 0.0 ? 0.0 : sum;
}

double jsd(const Distribution& p, const Distribution& q) {
  const auto [pa, qa] = align(p, q);
  const auto pm = pa.masses();
  const auto qm = qa.masses();
  double sum = 0.0;
  for (std::size_t i = 0; i < pm.size(); ++i) {
    const double m = 0.5 * (pm[i] + qm[i]);
    sum += xlogx_ratio(pm[i], m) + xlogx_ratio(qm[i], m);
  }
  return sum <= 0.0 ? 0.0 : 0.5 * sum;
}

double tv(const Distribution& p, const Distribution& q) {
  const auto [pa, qa] = align(p, q);
  const auto pm = pa.masses();
  const auto qm = qa.masses();
  double sum = 0.0;
  for (std::size_t i = 0; i < pm.size(); ++i) sum += std::abs(pm[i] - qm[i]);
  return 0.5 * sum;
}

}  // namespace dlite
