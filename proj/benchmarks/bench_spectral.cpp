// Copyright 2026 The qzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qzz/construction.hpp"
#include "qzz/spectral.hpp"

using namespace qzz;

static void BM_SuperoperatorMatrix(benchmark::State& state) {
  const Index n = state.range(0);
  const MixedUnitaryEnsemble g = random_base(n, 4, 1);
  for (auto _ : state) {
    ComplexMatrix s = superoperator_matrix(g);
    benchmark::DoNotOptimize(s.data());
  }
}
BENCHMARK(BM_SuperoperatorMatrix)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_LambdaExact(benchmark::State& state) {
  const Index n = state.range(0);
  const MixedUnitaryEnsemble g = random_base(n, 4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_exact(g).lambda);
  }
}
BENCHMARK(BM_LambdaExact)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

// One solve at the exact-method cap; this dominates the acceptance runs.
static void BM_LambdaExactAtCap(benchmark::State& state) {
  const MixedUnitaryEnsemble g = random_base(64, 8, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_exact(g).lambda);
  }
}
BENCHMARK(BM_LambdaExactAtCap)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_LambdaPower(benchmark::State& state) {
  const Index n = state.range(0);
  const MixedUnitaryEnsemble g = random_base(n, 4, 4);
  PowerOptions opts;
  opts.max_iter = state.range(1);
  opts.restarts = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_power(g, opts).lambda);
  }
}
BENCHMARK(BM_LambdaPower)->Args({16, 200})->Args({64, 200})->Args({256, 50})
    ->Unit(benchmark::kMillisecond);

static void BM_LargestSingularValueReal(benchmark::State& state) {
  const Index n = state.range(0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(largest_singular_value(a));
  }
}
BENCHMARK(BM_LargestSingularValueReal)->Arg(255)->Arg(1023)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
