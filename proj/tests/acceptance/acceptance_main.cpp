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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. The path of the dlite executable is argv[1].

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "dlite/baselines.hpp"
#include "dlite/distribution.hpp"
#include "dlite/error.hpp"
#include "dlite/measure.hpp"
#include "dlite/proofcheck/checks.hpp"
#include "dlite/proofcheck/quadrature.hpp"

namespace {

using namespace dlite;
using namespace dlite::proofcheck;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kSamples = 10000;
const std::vector<std::size_t> kDims{2, 3, 4, 8};

// 50-digit reference value of dl(0.5, 0.25).
constexpr double kDlHalfQuarter = 0.0094754699066758;

struct Verdict {
  bool passed;
  std::string detail;
};

bool all_passed(const std::vector<PropertyReport>& reports, std::string& detail) {
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.passed) {
      ok = false;
      detail += " failed:" + r.property_name + "(" + fmt_double(r.worst_violation) + ")";
    }
  }
  return ok;
}

double worst_of(const std::vector<PropertyReport>& reports, const std::string& prefix) {
  double w = 0.0;
  for (const auto& r : reports) {
    if (r.property_name.rfind(prefix, 0) == 0) w = std::max(w, std::abs(r.worst_violation));
  }
  return w;
}

Verdict oracle_equivalence() {
  const auto reports = check_oracle_agreement(OracleOptions{2000, 100, kSeed, {}});
  std::string detail = "lit_err=" + fmt_double(worst_of(reports, "oracle.lit")) +
                       " discount_err=" + fmt_double(worst_of(reports, "oracle.discount"));
  return {all_passed(reports, detail), detail};
}

Verdict metric_axioms() {
  const auto reports = check_metric_axioms(kSamples, kDims, kSeed);
  double min_slack = INFINITY;
  for (const auto& r : reports) {
    if (r.property_name.find("triangle_cbrt") != std::string::npos) {
      min_slack = std::min(min_slack, r.worst_violation);
    }
  }
  std::string detail = "reports=" + std::to_string(reports.size()) +
                       " min_triangle_slack=" + fmt_double(min_slack);
  return {all_passed(reports, detail), detail};
}

Verdict scaling_lemma() {
  const auto r = check_scaling_lemma(kSamples, kSeed);
  return {r.passed, "max_rel_err=" + fmt_double(r.worst_violation)};
}

Verdict derivative_chain() {
  const auto result = check_theorem1_derivatives();
  const bool one_sign = result.matched == SignMatch::kLeadingMinus ||
                        result.matched == SignMatch::kNoLeadingMinus;
  std::string detail =
      std::string("matched=") +
      (result.matched == SignMatch::kLeadingMinus     ? "leading-minus"
       : result.matched == SignMatch::kNoLeadingMinus ? "no-leading-minus"
       : result.matched == SignMatch::kBoth           ? "both"
                                                      : "neither") +
      " rel_err=" + fmt_double(result.leading_minus_max_rel_error) + "/" +
      fmt_double(result.no_leading_minus_max_rel_error);
  return {all_passed(result.reports, detail) && one_sign, detail};
}

Verdict concavity() {
  const auto r = check_theorem2_concavity();
  return {r.passed, "min_slack=" + fmt_double(r.worst_violation)};
}

bool disjoint_point_masses(const std::vector<double>& p, const std::vector<double>& q) {
  auto is_point = [](const std::vector<double>& v, std::size_t& at) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 1.0) {
        ++ones;
        at = i;
      } else if (v[i] != 0.0) {
        return false;
      }
    }
    return ones == 1;
  };
  std::size_t a = 0, b = 0;
  return is_point(p, a) && is_point(q, b) && a != b;
}

Verdict boundedness() {
  const auto s = search_supremum(kSamples, kDims, kSeed);
  const bool at_one = std::abs(s.max_found - 1.0) <= 1e-12;
  const bool at_point_masses = disjoint_point_masses(s.p, s.q);
  const auto contrast = check_kl_contrast();
  std::string detail = "max_random=" + fmt_double(s.max_random) +
                       " max_found=" + fmt_double(s.max_found) +
                       " disjoint_point_masses=" + (at_point_masses ? "yes" : "no") +
                       " kl_contrast=" + (contrast.passed ? "ok" : "failed");
  return {s.report.passed && at_one && at_point_masses && contrast.passed, detail};
}

Verdict known_values() {
  const Distribution e0 = make_distribution({"a", "b"}, std::array{1.0, 0.0});
  const Distribution e1 = make_distribution({"a", "b"}, std::array{0.0, 1.0});
  const double disjoint = dlite::dlite(e0, e1).total;
  const double half = dl_term(1.0, 0.0);
  const double closed = 0.25 - (psi(0.5) - psi(0.25)) / 1.5;
  const double quad = dl_by_quadrature(0.5, 0.25);
  const double value = dl_term(0.5, 0.25);
  const bool ok = disjoint == 1.0 && half == 0.5 && std::abs(value - closed) <= 1e-15 &&
                  std::abs(value - quad) <= 1e-12 && std::abs(value - kDlHalfQuarter) <= 1e-15;
  return {ok, "DL(e0,e1)=" + fmt_double(disjoint) + " dl(1,0)=" + fmt_double(half) +
                  " dl(0.5,0.25)=" + fmt_double(value) + " quadrature=" + fmt_double(quad)};
}

struct Captured {
  int status;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c{-1, {}};
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells(1);
    for (char ch : line) {
      if (ch == ',') {
        cells.emplace_back();
      } else {
        cells.back() += ch;
      }
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

Verdict cli_end_to_end(const std::string& exe, const std::string& fixture) {
  const auto verify = capture("'" + exe + "' verify");
  const std::string dist_cmd = "'" + exe + "' dist --input '" + fixture + "'";
  const auto first = capture(dist_cmd);
  const auto second = capture(dist_cmd);
  const auto rows = split_csv(first.out);

  bool shape = rows.size() == 4;
  bool symmetric = shape, zero_diagonal = shape;
  for (std::size_t i = 1; shape && i < rows.size(); ++i) {
    if (rows[i].size() != 4) {
      shape = symmetric = zero_diagonal = false;
      break;
    }
    zero_diagonal = zero_diagonal && rows[i][i] == "0";
    for (std::size_t j = 1; j < rows.size(); ++j) {
      symmetric = symmetric && rows[i][j] == rows[j][i];
    }
  }
  const bool identical = first.status == 0 && first.out == second.out;
  std::string detail = "verify_exit=" + std::to_string(verify.status) +
                       " dist_exit=" + std::to_string(first.status) +
                       " symmetric=" + (symmetric ? "yes" : "no") +
                       " zero_diagonal=" + (zero_diagonal ? "yes" : "no") +
                       " byte_identical=" + (identical ? "yes" : "no");
  return {verify.status == 0 && shape && symmetric && zero_diagonal && identical, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <dlite executable> <3-distribution csv>\n", argv[0]);
    return 2;
  }
  struct Criterion {
    const char* name;
    double budget_seconds;  // 0 means no runtime bound
    std::function<Verdict()> run;
  };
  const std::string exe = argv[1], fixture = argv[2];
  const std::vector<Criterion> criteria{
      {"1 oracle equivalence", 30, oracle_equivalence},
      {"2 metric axioms", 60, metric_axioms},
      {"3 scaling lemma", 0, scaling_lemma},
      {"4 derivative chain", 0, derivative_chain},
      {"5 cube-root concavity", 0, concavity},
      {"6 boundedness", 0, boundedness},
      {"7 known values", 0, known_values},
      {"8 cli end-to-end", 0, [&] { return cli_end_to_end(exe, fixture); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      v.passed = false;
      v.detail += " over time budget";
    }
    if (!v.passed) ++failures;
    std::printf("%s [%s] %s time=%.2fs\n", v.passed ? "PASS" : "FAIL", c.name, v.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
