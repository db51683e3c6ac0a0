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

#include <vector>

#include <benchmark/benchmark.h>

#include "dlite/baselines.hpp"
#include "dlite/distance_matrix.hpp"
#include "dlite/measure.hpp"
#include "dlite/proofcheck/quadrature.hpp"
#include "dlite/proofcheck/sampling.hpp"

namespace {

using dlite::Distribution;
using dlite::proofcheck::CounterRng;

std::vector<Distribution> sample(std::size_t count, std::size_t dim) {
  CounterRng rng(42, dim);
  std::vector<Distribution> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(dlite::proofcheck::sample_simplex(rng, dim));
  return out;
}

void BM_DlTerm(benchmark::State& state) {
  CounterRng rng(1, 0);
  std::vector<double> xs(1024);
  for (double& x : xs) x = rng.uniform();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlite::dl_term(xs[i % 1024], xs[(i + 1) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_DlTerm);

void BM_DliteCbrt(benchmark::State& state) {
  const auto ds = sample(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dlite::dlite_cbrt(ds[0], ds[1]));
}
BENCHMARK(BM_DliteCbrt)->Arg(2)->Arg(8)->Arg(64);

void BM_Jsd(benchmark::State& state) {
  const auto ds = sample(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dlite::jsd(ds[0], ds[1]));
}
BENCHMARK(BM_Jsd)->Arg(2)->Arg(8)->Arg(64);

void BM_DistanceMatrix(benchmark::State& state) {
  const auto ds = sample(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlite::distance_matrix(ds, dlite::MeasureKind::kDliteCbrt));
  }
}
BENCHMARK(BM_DistanceMatrix)->Arg(16)->Arg(64);

void BM_DlByQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dlite::proofcheck::dl_by_quadrature(0.5, 0.25));
}
BENCHMARK(BM_DlByQuadrature);

}  // namespace

BENCHMARK_MAIN();
