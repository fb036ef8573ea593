// Copyright 2026 The fixgraph Authors
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

#include "fixgraph/automorphism.hpp"
#include "fixgraph/fixing.hpp"
#include "fixgraph/graph.hpp"

namespace fixgraph {
namespace {

void BM_EnumerateComplete(benchmark::State& state) {
  const Graph g = generate(FamilySpec::complete(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_automorphisms(g).size());
  }
}
BENCHMARK(BM_EnumerateComplete)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateGap(benchmark::State& state) {
  const Graph g = generate(FamilySpec::gap_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_automorphisms(g).size());
  }
}
BENCHMARK(BM_EnumerateGap)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateCycle(benchmark::State& state) {
  const Graph g = generate(FamilySpec::cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_automorphisms(g).size());
  }
}
BENCHMARK(BM_EnumerateCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_FixingNumberGap(benchmark::State& state) {
  const Graph g = generate(FamilySpec::gap_graph(static_cast<int>(state.range(0))));
  const AutomorphismGroup grp = enumerate_automorphisms(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fixing_number(g, grp).size);
  }
}
BENCHMARK(BM_FixingNumberGap)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_DeterminedNumberGap(benchmark::State& state) {
  const Graph g = generate(FamilySpec::gap_graph(static_cast<int>(state.range(0))));
  const AutomorphismGroup grp = enumerate_automorphisms(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(determined_number(grp));
  }
}
BENCHMARK(BM_DeterminedNumberGap)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_FixingGraph(benchmark::State& state) {
  const Graph g = generate(FamilySpec::complete(static_cast<int>(state.range(0))));
  const AutomorphismGroup grp = enumerate_automorphisms(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fixing_graph(g, grp).edge_count());
  }
}
BENCHMARK(BM_FixingGraph)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fixgraph

BENCHMARK_MAIN();
