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

#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dlite/error.hpp"
#include "dlite/measure.hpp"
#include "dlite/proofcheck/checks.hpp"
#include "dlite/proofcheck/report.hpp"
#include "dlite/proofcheck/sampling.hpp"
#include "test_util.hpp"

namespace dlite::proofcheck {
namespace {

TEST(CounterRngTest, DeterministicAndStreamed) {
  CounterRng a(7, 0), b(7, 0), c(7, 1), d(8, 0);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    EXPECT_NE(x, d.next());
  }
}

TEST(CounterRngTest, UniformRange) {
  CounterRng rng(1, 2);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(SamplingTest, SimplexAndLabels) {
  EXPECT_EQ(outcome_labels(3), (std::vector<std::string>{"o00", "o01", "o02"}));
  CounterRng rng(3, 0);
  for (std::size_t dim : {2u, 5u, 16u}) {
    const Distribution p = sample_simplex(rng, dim);
    EXPECT_EQ(p.size(), dim);
    double total = 0;
    for (double m : p.masses()) total += m;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  const Distribution e = point_mass(4, 2);
  EXPECT_EQ(e.mass("o02"), 1.0);
  EXPECT_EQ(e.mass("o00"), 0.0);
}

TEST(ReportTest, TrackerKinds) {
  PropertyTracker ineq("i", PropertyKind::kInequality, 1e-3, 5);
  ineq.observe(0.5, [] { return "a"; });
  ineq.observe(-1e-4, [] { return "b"; });
  ineq.observe(0.1, [] { return "c"; });
  auto r = ineq.report();
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.samples, 3u);
  EXPECT_EQ(r.worst_violation, -1e-4);
  EXPECT_EQ(r.worst_case_inputs, "b");
  EXPECT_EQ(r.seed, 5u);

  PropertyTracker eq("e", PropertyKind::kEquality, 1e-3, 0);
  eq.observe(-2e-3, [] { return "x"; });
  EXPECT_FALSE(eq.report().passed);

  PropertyTracker pos("p", PropertyKind::kStrictlyPositive, 0, 0);
  pos.observe(1.0, [] { return ""; });
  pos.observe(0.0, [] { return "zero"; });
  EXPECT_FALSE(pos.report().passed);

  PropertyTracker empty("n", PropertyKind::kInequality, 1, 0);
  EXPECT_FALSE(empty.report().passed);

  PropertyTracker forced("f", PropertyKind::kInequality, 1, 0);
  forced.observe(1.0, [] { return "ok"; });
  forced.fail("side condition");
  EXPECT_FALSE(forced.report().passed);
}

TEST(ReportTest, JsonFieldsInOrder) {
  PropertyReport r{"name", 10, 0.25, "p=(1,0)", true, 42};
  const std::string line = to_json(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"property_name", "samples", "worst_violation",
                                            "worst_case_inputs", "passed", "seed"}));
  EXPECT_EQ(j["worst_violation"].get<double>(), 0.25);
}

TEST(TriangleTest, DegenerateAndExtremeTriples) {
  const Distribution p = testing::dist2(0.2, 0.8), q = testing::dist2(0.6, 0.4);
  EXPECT_NEAR(triangle_slack(p, p, p), 0.0, 0.0);
  EXPECT_NEAR(triangle_slack(p, p, q), 0.0, 1e-15);
  EXPECT_GE(per_term_triangle_slack(p, q, p), 0.0);
  // Every pair of distinct point masses is at distance 1.
  const Distribution a = point_mass(3, 0), b = point_mass(3, 1), c = point_mass(3, 2);
  EXPECT_NEAR(triangle_slack(a, b, c), 1.0, 1e-15);
}

TEST(ChecksTest, ReproducibleReports) {
  const auto first = check_metric_axioms(300, {2, 8}, 11);
  const auto second = check_metric_axioms(300, {2, 8}, 11);
  ASSERT_EQ(first.size(), 10u);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(to_json(first[i]), to_json(second[i]));
    EXPECT_TRUE(first[i].passed) << to_json(first[i]);
  }
}

TEST(ChecksTest, ScalingLemmaPasses) {
  const auto r = check_scaling_lemma(2000, 3);
  EXPECT_TRUE(r.passed) << to_json(r);
  EXPECT_LE(r.worst_violation, 1e-10);
}

TEST(ChecksTest, ScalingByEightIsTwiceInCubeRoot) {
  const Distribution p = testing::dist2(0.3, 0.7), q = testing::dist2(0.9, 0.1);
  double base = 0, scaled = 0;
  for (const auto& label : p.labels()) {
    base += dl_term(p.mass(label), q.mass(label));
    scaled += 8 * dl_term(p.mass(label), q.mass(label));
  }
  EXPECT_NEAR(std::cbrt(scaled), 2 * std::cbrt(base), 1e-15);
}

TEST(ChecksTest, DerivativeSignResolved) {
  Grid grid;
  grid.points = 20;
  const auto result = check_theorem1_derivatives(grid);
  EXPECT_EQ(result.matched, SignMatch::kLeadingMinus);
  EXPECT_LT(result.leading_minus_max_rel_error, 1e-5);
  EXPECT_GT(result.no_leading_minus_max_rel_error, 1.0);
  for (const auto& r : result.reports) EXPECT_TRUE(r.passed) << to_json(r);
}

TEST(ChecksTest, PrintedDerivativesAtKnownPoint) {
  // dl'(x, c) at x = c vanishes, as does dl''.
  EXPECT_NEAR(printed_dl_prime(0.4, 0.4, PrintedForm::kLeadingMinus), 0.0, 1e-17);
  EXPECT_NEAR(printed_dl_second(0.4, 0.4), 0.0, 1e-16);
  EXPECT_EQ(printed_dl_prime(0.4, 0.1, PrintedForm::kLeadingMinus),
            -printed_dl_prime(0.4, 0.1, PrintedForm::kNoLeadingMinus));
}

TEST(ChecksTest, ConcavityOnCoarseGrid) {
  Grid grid;
  grid.points = 20;
  const auto r = check_theorem2_concavity(grid);
  EXPECT_TRUE(r.passed) << to_json(r);
}

TEST(ChecksTest, SupremumReachedAtDisjointPointMasses) {
  const auto s = search_supremum(500, {2, 3}, 9);
  EXPECT_TRUE(s.report.passed) << to_json(s.report);
  EXPECT_LE(s.max_found, 1.0 + 1e-12);
  EXPECT_GE(s.max_found, 1.0 - 1e-9);
}

TEST(ChecksTest, KlContrast) {
  const auto r = check_kl_contrast();
  EXPECT_TRUE(r.passed) << to_json(r);
}

TEST(ChecksTest, OracleAgreementSmall) {
  OracleOptions opts;
  opts.pairs = 100;
  opts.zero_pairs = 10;
  const auto reports = check_oracle_agreement(opts);
  EXPECT_EQ(reports.size(), 8u);
  std::set<std::string> names;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << to_json(r);
    names.insert(r.property_name);
  }
  EXPECT_EQ(names.size(), 8u);
}

TEST(ChecksTest, RunAllRejectsBadOptions) {
  VerifyOptions opts;
  opts.samples = 0;
  EXPECT_THROW(run_all(opts), Error);
  opts.samples = 10;
  opts.dims = {1};
  EXPECT_THROW(run_all(opts), Error);
  opts.dims = {17};
  EXPECT_THROW(run_all(opts), Error);
}

}  // namespace
}  // namespace dlite::proofcheck
