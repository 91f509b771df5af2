// Copyright 2026 The wrig-lab Authors
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

#include <benchmark/benchmark.h>

#include "wrig/bipartization.h"
#include "wrig/brute_force.h"
#include "wrig/cut_algorithms.h"
#include "wrig/evaluation.h"
#include "wrig/intersection_graph.h"
#include "wrig/sampling.h"
#include "wrig/sequence_count.h"

namespace wrig {
namespace {

void BM_SampleSparse(benchmark::State& state) {
  const auto params = ModelParams::WithDensity(static_cast<Vertex>(state.range(0)), 2.0);
  Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMatrix(params, seed++));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleSparse)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SampleDense(benchmark::State& state) {
  const auto params = ModelParams::Fixed(static_cast<Vertex>(state.range(0)), 64, 0.3);
  Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMatrix(params, seed++));
  }
}
BENCHMARK(BM_SampleDense)->Arg(256)->Arg(4096);

void BM_MajorityCut(benchmark::State& state) {
  const auto r = SampleMatrix(
      ModelParams::WithDensity(static_cast<Vertex>(state.range(0)), 10.0), 1);
  const MajorityConfig config{.epsilon = 0.01};
  Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MajorityCut(r, config, seed++).weight);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MajorityCut)->Arg(2000)->Arg(20000);

void BM_RandomCut(benchmark::State& state) {
  const auto r = SampleMatrix(ModelParams::WithDensity(2000, 10.0), 1);
  Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RandomCut(r, seed++).weight);
  }
}
BENCHMARK(BM_RandomCut);

void BM_BuildGraph(benchmark::State& state) {
  const auto r = SampleMatrix(ModelParams::WithDensity(2000, 10.0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildGraph(r).total_offdiag);
  }
}
BENCHMARK(BM_BuildGraph);

void BM_BruteForceMaxCut(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const auto r = SampleMatrix(ModelParams::Fixed(n, n, 0.3), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForceMaxCut(r).weight);
  }
}
BENCHMARK(BM_BruteForceMaxCut)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BruteForceMinDiscrepancy(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const auto r = SampleMatrix(ModelParams::Fixed(n, n, 0.3), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForceMinDiscrepancy(r).discrepancy);
  }
}
BENCHMARK(BM_BruteForceMinDiscrepancy)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_WeakBipartization(benchmark::State& state) {
  const auto r = SampleMatrix(
      ModelParams::WithDensity(static_cast<Vertex>(state.range(0)), 0.5), 1);
  Seed seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(WeakBipartization(r, seed++).iterations);
  }
}
BENCHMARK(BM_WeakBipartization)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_CountSequences(benchmark::State& state) {
  const auto r = SampleMatrix(ModelParams::Fixed(8, 8, 0.25), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountSequencesExact(r, 3));
  }
}
BENCHMARK(BM_CountSequences);

}  // namespace
}  // namespace wrig

BENCHMARK_MAIN();
