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

#include "qzz/channel.hpp"
#include "qzz/construction.hpp"
#include "qzz/zigzag.hpp"

using namespace qzz;

static void BM_Apply(benchmark::State& state) {
  const Index n = state.range(0);
  const Index d = state.range(1);
  const MixedUnitaryEnsemble g = random_base(n, d, 1);
  ComplexMatrix x = haar_unitary(n, 2).matrix();
  for (auto _ : state) {
    ComplexMatrix y = g.apply(x);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Apply)->Args({16, 4})->Args({64, 8})->Args({256, 2})->Args({256, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_Square(benchmark::State& state) {
  const Index n = state.range(0);
  const MixedUnitaryEnsemble g = random_base(n, 4, 3);
  for (auto _ : state) {
    MixedUnitaryEnsemble g2 = square(g);
    benchmark::DoNotOptimize(&g2);
  }
}
BENCHMARK(BM_Square)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_TensorChannels(benchmark::State& state) {
  const Index n = state.range(0);
  const MixedUnitaryEnsemble a = random_base(n, 2, 4);
  const MixedUnitaryEnsemble b = random_base(n, 2, 5);
  for (auto _ : state) {
    MixedUnitaryEnsemble ab = tensor_channels(a, b);
    benchmark::DoNotOptimize(&ab);
  }
}
BENCHMARK(BM_TensorChannels)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Zigzag(benchmark::State& state) {
  const Index n1 = state.range(0);
  const Index d1 = state.range(1);
  const MixedUnitaryEnsemble g1 = random_base(n1, d1, 6);
  const MixedUnitaryEnsemble g2 = random_base(d1, 2, 7);
  for (auto _ : state) {
    MixedUnitaryEnsemble zz = zigzag(g1, g2);
    benchmark::DoNotOptimize(&zz);
  }
}
BENCHMARK(BM_Zigzag)->Args({16, 4})->Args({64, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
