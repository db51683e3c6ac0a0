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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlite/baselines.hpp"
#include "dlite/error.hpp"
#include "dlite/measure.hpp"
#include "dlite/proofcheck/checks.hpp"

namespace dlite::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<NamedDistribution> load(const CliConfig& cfg) {
  auto ds = io::load_distributions(cfg.input_path, cfg.format);
  if (cfg.smooth_epsilon) {
    for (auto& d : ds) d.distribution = smooth(d.distribution, *cfg.smooth_epsilon);
  }
  return ds;
}

void apply_tolerances(const std::map<std::string, double>& overrides,
                      proofcheck::Tolerances& tol) {
  const std::map<std::string, double*> fields{
      {"oracle", &tol.oracle},
      {"oracle_zero", &tol.oracle_zero},
      {"triangle", &tol.triangle},
      {"identity_tv", &tol.identity_tv},
      {"scaling", &tol.scaling},
      {"derivative", &tol.derivative},
      {"diagonal", &tol.diagonal},
      {"second_derivative_floor", &tol.second_derivative_floor},
      {"concavity", &tol.concavity},
      {"supremum", &tol.supremum},
  };
  for (const auto& [key, value] : overrides) {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw Error(ErrorCode::kParseError, "unknown tolerance '" + key + "'");
    }
    if (!(value >= 0.0)) {
      throw Error(ErrorCode::kParseError, "tolerance '" + key + "' must be non-negative");
    }
    *it->second = value;
  }
}

}  // namespace

std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_dist(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto ds = load(cfg);
    const DistanceMatrix m = distance_matrix(ds, cfg.measure);
    std::ostringstream os;
    for (const auto& label : m.labels()) os << ',' << csv_field(label);
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << csv_field(m.labels()[i]);
      for (std::size_t j = 0; j < m.size(); ++j) os << ',' << format_cell(m(i, j));
      os << '\n';
    }
    out << os.str();
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::kKlUndefined) {
      err << "hint: pass --smooth <epsilon> to make KL finite\n";
      return kMeasureUndefined;
    }
    return kUsageError;
  }
}

int run_pair(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto ds = load(cfg);
    auto find = [&ds](const std::string& name) -> const Distribution& {
      for (const auto& d : ds) {
        if (d.name == name) return d.distribution;
      }
      throw Error(ErrorCode::kUnknownName, "no distribution named '" + name + "'");
    };
    const Distribution& p = find(cfg.name_a);
    const Distribution& q = find(cfg.name_b);

    const MeasureResult dl = dlite(p, q);
    nlohmann::ordered_json j;
    j["lit"] = lit(p, q).total;
    j["delta_h"] = delta_h(p, q).total;
    j["dlite"] = dl.total;
    j["dlite_cbrt"] = dlite_cbrt(p, q);
    try {
      j["kl"] = kl(p, q);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kKlUndefined) throw;
      j["kl"] = nullptr;
    }
    j["jsd"] = jsd(p, q);
    j["tv"] = tv(p, q);
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [label, t] : dl.per_outcome) {
      terms[label] = {{"g", t.g}, {"delta", t.delta}, {"dl", t.dl}};
    }
    j["per_outcome"] = std::move(terms);
    out << j.dump(2) << '\n';
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  proofcheck::VerifyOptions opts;
  opts.samples = cfg.samples;
  opts.dims = cfg.dims;
  opts.seed = cfg.seed;
  std::vector<proofcheck::PropertyReport> reports;
  try {
    apply_tolerances(cfg.tolerances, opts.tolerances);
    reports = proofcheck::run_all(opts);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  bool all_passed = true;
  for (const auto& r : reports) {
    out << proofcheck::to_json(r) << '\n';
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kOk : kPropertyFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DLITE entropic-difference measures and their verification suite", "dlite"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format, measure = "dlite-cbrt", output;
  std::vector<std::string> tolerance_args;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input_path, "CSV or JSON file of distributions")->required();
    sub->add_option("--format", format, "csv or json (default: from extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--smooth", cfg.smooth_epsilon,
                    "additive smoothing applied to every distribution first")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "write here instead of standard output");
  };

  CLI::App* dist = app.add_subcommand("dist", "pairwise distance matrix as CSV");
  add_input(dist);
  dist->add_option("--measure", measure,
                   "dlite, dlite-cbrt, lit, delta-h, kl, jsd or tv (default dlite-cbrt)");

  CLI::App* pair = app.add_subcommand("pair", "all measures between two named distributions");
  add_input(pair);
  pair->add_option("name_a", cfg.name_a, "first distribution")->required();
  pair->add_option("name_b", cfg.name_b, "second distribution")->required();

  CLI::App* verify = app.add_subcommand("verify", "run every numerical verification suite");
  verify->add_option("--seed", cfg.seed, "random seed (default 42)");
  verify->add_option("--samples", cfg.samples, "samples per randomized suite (default 10000)");
  verify->add_option("--dims", cfg.dims, "simplex dimensions (default 2,3,4,8)")
      ->delimiter(',');
  verify->add_option("--tolerance", tolerance_args, "override a threshold, key=value");
  verify->add_option("--output", output, "write here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (dist->parsed()) cfg.subcommand = Subcommand::kDist;
  if (pair->parsed()) cfg.subcommand = Subcommand::kPair;
  if (verify->parsed()) cfg.subcommand = Subcommand::kVerify;

  if (!format.empty()) cfg.format = io::parse_format(format);
  if (const auto kind = parse_measure_kind(measure)) {
    cfg.measure = *kind;
  } else {
    err << "error: unknown measure '" << measure << "'\n";
    return kUsageError;
  }
  if (cfg.samples == 0) {
    err << "error: --samples must be positive\n";
    return kUsageError;
  }
  for (const auto& arg : tolerance_args) {
    const auto eq = arg.find('=');
    double value = 0.0;
    std::istringstream is(eq == std::string::npos ? "" : arg.substr(eq + 1));
    if (eq == std::string::npos || !(is >> value) || !is.eof()) {
      err << "error: --tolerance expects key=value, got '" << arg << "'\n";
      return kUsageError;
    }
    cfg.tolerances[arg.substr(0, eq)] = value;
  }
  if (!output.empty()) cfg.output_path = output;

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.output_path) {
    file.open(*cfg.output_path);
    if (!file) {
      err << "error: cannot write '" << cfg.output_path->string() << "'\n";
      return kUsageError;
    }
    sink = &file;
  }

  switch (cfg.subcommand) {
    case Subcommand::kDist: return run_dist(cfg, *sink, err);
    case Subcommand::kPair: return run_pair(cfg, *sink, err);
    case Subcommand::kVerify: return run_verify(cfg, *sink, err);
  }
  return kUsageError;
}

}  // namespace dlite::cli
