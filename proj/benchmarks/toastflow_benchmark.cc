// Copyright 2026 The Toastflow Authors
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

#include <vector>

#include "toastflow/graph.h"
#include "toastflow/oracle.h"
#include "toastflow/parity.h"
#include "toastflow/random.h"
#include "toastflow/rounding.h"
#include "toastflow/toast.h"

namespace toastflow {
namespace {

// side, base, factor: toast shapes known to be valid with margin 3.
TorusToastParams ToastShape(int side) {
  switch (side) {
    case 16: return {16, 16, 8, 2, 3, 1};
    case 32: return {32, 32, 16, 2, 3, 1};
    default: return {64, 64, 16, 2, 3, 1};
  }
}

void BM_RoundFlow(benchmark::State& state) {
  InstanceParams params;
  params.toast = ToastShape(static_cast<int>(state.range(0)));
  params.circuit_count = static_cast<int>(state.range(1));
  params.denominators = {3, 5, 7, 9, 11};
  params.seed = 7;
  const InstanceBundle bundle = RandomInstance(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RoundFlow(bundle.problem, bundle.toast, bundle.phi));
  }
  state.counters["edges"] = bundle.problem.graph.num_edges();
}
BENCHMARK(BM_RoundFlow)
    ->Args({16, 10})
    ->Args({16, 40})
    ->Args({32, 40})
    ->Args({64, 40})
    ->Unit(benchmark::kMillisecond);

VertexSet AllOf(const Graph& g) {
  VertexSet all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return all;
}

void BM_OddParitySubgraph(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = Graph::Torus(side, side);
  const VertexSet all = AllOf(g);
  Rng rng(11);
  VertexSet odd;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (rng.Chance(1, 8)) odd.push_back(v);
  }
  if (odd.size() % 2 == 1) odd.pop_back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(OddParitySubgraph(g, all, odd).size());
  }
}
BENCHMARK(BM_OddParitySubgraph)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

// Even edge set from overlapping rectangle boundaries.
void BM_CycleDecompose(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = Graph::Torus(side, side);
  Rng rng(13);
  EdgeSet even(g);
  for (int i = 0; i < side; ++i) {
    const OrientedCycle c = RectangleCycle(
        g, static_cast<int>(rng.Below(side)), static_cast<int>(rng.Below(side)),
        static_cast<int>(rng.Between(1, side / 2)), static_cast<int>(rng.Between(1, side / 2)));
    for (const auto& [e, sign] : c.Steps(g)) even.Toggle(e);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(CycleDecompose(g, even).size());
  }
}
BENCHMARK(BM_CycleDecompose)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_FeasibleIntegralFlow(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = Graph::Torus(side, side);
  Rng rng(5);
  std::vector<int64_t> demand(g.num_vertices(), 0);
  for (int i = 0; i < g.num_vertices() / 4; ++i) {
    const Vertex a = static_cast<Vertex>(rng.Below(g.num_vertices()));
    const Vertex b = static_cast<Vertex>(rng.Below(g.num_vertices()));
    ++demand[a];
    --demand[b];
  }
  const FlowProblem problem{g, demand, std::vector<int64_t>(g.num_edges(), 2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(FeasibleIntegralFlow(problem));
  }
}
BENCHMARK(BM_FeasibleIntegralFlow)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace toastflow

BENCHMARK_MAIN();
