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


// Criteria 1 and 2: rounding bounds on random torus instances and the
// parity property of dyadic flows.

#include <cstdio>
#include <deque>
#include <sstream>

#include "acceptance.h"
#include "toastflow/errors.h"
#include "toastflow/io.h"
#include "toastflow/oracle.h"
#include "toastflow/random.h"
#include "toastflow/rounding.h"

namespace toastflow::acceptance {
namespace {

constexpr int kBoundInstances = 500;
constexpr int kMaxCircuits = 40;
const Rational kStage1Bound(1);
const Rational kStage2Bound(2);
const Rational kTotalBound(3);

constexpr int kParityFlows = 200;

// Torus side, base, factor, margin. Sides 8 to 24, margins 3 and 4.
struct ToastShape {
  int side, base, factor, margin;
};
constexpr ToastShape kShapes[] = {
    {8, 8, 1, 3},    {8, 8, 1, 4},    {10, 10, 1, 3}, {12, 12, 1, 4},
    {14, 14, 1, 3},  {16, 8, 2, 3},   {16, 16, 1, 4}, {18, 18, 1, 4},
    {20, 10, 2, 3},  {22, 22, 1, 3},  {24, 12, 2, 3}, {24, 12, 2, 4},
    {24, 24, 1, 4},
};

struct BoundCheck {
  bool ok = true;
  std::string why;
  Rational stage1, stage2, total;
};

// Rebuilds the stage-1 intermediate from the trace and checks every bound
// without trusting the library's own change vectors.
BoundCheck CheckRounding(const InstanceBundle& b, const RoundingResult& r) {
  BoundCheck c;
  const Graph& g = b.problem.graph;
  auto fail = [&](const std::string& why) {
    if (c.ok) c.why = why;
    c.ok = false;
  };
  Flow middle = b.phi;
  Flow end = b.phi;
  bool seen_stage2 = false;
  for (const RoundingStep& s : r.trace.steps) {
    if (s.stage == 2) {
      seen_stage2 = true;
      if (!middle.IsDyadic()) fail("stage 2 began on a non-dyadic flow");
    } else if (seen_stage2) {
      fail("stage 1 step after stage 2");
    }
    if (!AddAlong(g, s.cycle.vertices, s.constant, end)) fail("trace walk is not a cycle");
    if (s.stage == 1) AddAlong(g, s.cycle.vertices, s.constant, middle);
  }
  if (!middle.IsDyadic()) fail("stage 1 result not dyadic");
  if (!(end == r.flow)) fail("trace replay differs from output");
  if (!r.flow.IsIntegral()) fail("output not integral");
  const std::vector<Rational> net = NetOutflow(g, r.flow);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (net[v] != Rational(b.problem.demand[v])) {
      fail("divergence differs at vertex " + std::to_string(g.id(v)));
      break;
    }
  }
  c.stage1 = MaxGap(middle, b.phi);
  c.stage2 = MaxGap(r.flow, middle);
  c.total = MaxGap(r.flow, b.phi);
  if (!(c.stage1 < kStage1Bound)) fail("stage 1 moved an edge by " + c.stage1.ToString());
  if (!(c.stage2 < kStage2Bound)) fail("stage 2 moved an edge by " + c.stage2.ToString());
  if (!(c.total < kTotalBound)) fail("output is " + c.total.ToString() + " away");
  return c;
}

// Spanning-tree routing of an integral demand on a connected graph.
Flow RouteOnTree(const Graph& g, const std::vector<int64_t>& demand) {
  std::vector<Vertex> order;
  std::vector<Vertex> parent(g.num_vertices(), -1);
  std::vector<EdgeId> via(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (const Incidence& inc : g.incident(v)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      parent[inc.neighbor] = v;
      via[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  std::vector<int64_t> subtree = demand;
  Flow flow(g);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (parent[v] < 0) continue;
    // subtree[v] units leave v's subtree towards the parent.
    flow.Add(via[v], Rational(g.edge(via[v]).u == v ? subtree[v] : -subtree[v]));
    subtree[parent[v]] += subtree[v];
  }
  return flow;
}

// Random connected graph: a random tree plus extra edges.
Graph RandomConnected(Rng& rng, int n, int extra) {
  std::vector<std::pair<int64_t, int64_t>> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (int i = 1; i < n; ++i) {
    const int p = static_cast<int>(rng.Below(i));
    edges.emplace_back(p, i);
    has[p][i] = has[i][p] = 1;
  }
  for (int k = 0; k < extra; ++k) {
    const int a = static_cast<int>(rng.Below(n));
    const int b = static_cast<int>(rng.Below(n));
    if (a == b || has[a][b]) continue;
    has[a][b] = has[b][a] = 1;
    edges.emplace_back(a, b);
  }
  std::vector<int64_t> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return Graph::FromEdges(ids, edges);
}

// A cycle through a random non-bridge edge, found by breadth-first search.
std::optional<std::vector<Vertex>> RandomCycle(const Graph& g, Rng& rng) {
  const EdgeId e = static_cast<EdgeId>(rng.Below(g.num_edges()));
  const Vertex u = g.edge(e).u;
  const Vertex v = g.edge(e).v;
  std::vector<Vertex> from(g.num_vertices(), -1);
  std::deque<Vertex> queue{v};
  from[v] = v;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incident(x)) {
      if (inc.edge == e || from[inc.neighbor] >= 0) continue;
      from[inc.neighbor] = x;
      queue.push_back(inc.neighbor);
    }
  }
  if (from[u] < 0) return std::nullopt;
  std::vector<Vertex> path;  // u back to v
  for (Vertex x = u; x != v; x = from[x]) path.push_back(x);
  path.push_back(v);
  // Walk u -> v along e, then v -> ... -> u.
  std::vector<Vertex> cycle{u};
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (*it != u) cycle.push_back(*it);
  }
  return cycle;
}

struct DyadicSample {
  Graph graph;
  std::vector<int64_t> demand;
  Flow flow;
};

DyadicSample MakeDyadicSample(int index) {
  Rng rng(0x5eed0000ULL + static_cast<uint64_t>(index));
  if (index % 2 == 0) {
    const int sides[] = {8, 10, 12, 16};
    const int side = sides[rng.Below(4)];
    InstanceParams params;
    params.toast = {side, side, side, 1, 3, static_cast<uint64_t>(index)};
    params.circuit_count = static_cast<int>(rng.Between(5, 40));
    params.denominators = {2, 4, 8, 16, 32, 64};
    params.seed = static_cast<uint64_t>(index);
    InstanceBundle b = RandomInstance(params);
    return {b.problem.graph, b.problem.demand, b.phi};
  }
  const int n = static_cast<int>(rng.Between(4, 14));
  Graph g = RandomConnected(rng, n, static_cast<int>(rng.Between(2, 2 * n)));
  std::vector<int64_t> demand(n, 0);
  for (int i = 0; i + 1 < n; ++i) {
    demand[i] = rng.Between(-2, 2);
    demand[n - 1] -= demand[i];
  }
  Flow flow = RouteOnTree(g, demand);
  const int circuits = static_cast<int>(rng.Between(1, 12));
  for (int k = 0; k < circuits; ++k) {
    const auto cycle = RandomCycle(g, rng);
    if (!cycle) continue;
    const int l = static_cast<int>(rng.Between(1, 8));
    const Rational amount =
        Rational(rng.Between(-9, 9)) * Rational::InversePowerOfTwo(l);
    AddAlong(g, *cycle, amount, flow);
  }
  return {std::move(g), std::move(demand), std::move(flow)};
}

}  // namespace

Outcome RoundingBounds(const std::optional<std::filesystem::path>& out_dir) {
  if (out_dir) std::filesystem::create_directories(*out_dir);
  int passed = 0;
  std::string first_failure;
  Rational worst1, worst2, worst;
  int64_t steps = 0;
  for (int i = 0; i < kBoundInstances; ++i) {
    Rng pick(0xb0b0ULL + static_cast<uint64_t>(i));
    const ToastShape& s = kShapes[pick.Below(std::size(kShapes))];
    InstanceParams params;
    params.toast = {s.side, s.side, s.base, s.factor, s.margin,
                    static_cast<uint64_t>(i)};
    params.circuit_count = static_cast<int>(pick.Between(0, kMaxCircuits));
    params.denominators = {3, 5, 7, 9, 11};
    params.seed = static_cast<uint64_t>(i);
    BoundCheck c;
    try {
      const InstanceBundle b = RandomInstance(params);
      if (!CheckBundle(b)) throw DomainError("generated bundle is inconsistent");
      const RoundingResult r = RoundFlow(b.problem, b.toast, b.phi);
      c = CheckRounding(b, r);
      steps += static_cast<int64_t>(r.trace.steps.size());
      if (out_dir) {
        char name[32];
        std::snprintf(name, sizeof(name), "instance_%03d", i);
        const std::filesystem::path base = *out_dir / name;
        WriteFileAtomic(base.string() + ".flow.json",
                        SerializeFlow(b.problem.graph, r.flow));
        WriteFileAtomic(base.string() + ".trace.json",
                        SerializeTrace(b.problem.graph, r.trace.steps));
      }
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = e.what();
    }
    if (c.ok) {
      ++passed;
      if (worst1 < c.stage1) worst1 = c.stage1;
      if (worst2 < c.stage2) worst2 = c.stage2;
      if (worst < c.total) worst = c.total;
    } else if (first_failure.empty()) {
      first_failure = "instance " + std::to_string(i) + ": " + c.why;
    }
  }
  std::ostringstream detail;
  detail << passed << "/" << kBoundInstances << " instances; max stage-1 "
         << worst1.ToString() << " (< 1), max stage-2 " << worst2.ToString()
         << " (< 2), max total " << worst.ToString() << " (< 3); " << steps
         << " circuits";
  if (!first_failure.empty()) detail << "; first failure: " << first_failure;
  return {passed == kBoundInstances, detail.str()};
}

Outcome DyadicParity() {
  int passed = 0;
  int64_t literal_failures = 0;
  int64_t vertices_checked = 0;
  std::string first_failure;
  for (int i = 0; i < kParityFlows; ++i) {
    const DyadicSample s = MakeDyadicSample(i);
    const Graph& g = s.graph;
    bool ok = s.flow.IsDyadic();
    const std::vector<Rational> net = NetOutflow(g, s.flow);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (net[v] != Rational(s.demand[v])) ok = false;
    }
    int global = 0;
    for (const Rational& x : s.flow.values()) {
      global = std::max(global, x.DenominatorExponent());
    }
    for (Vertex v = 0; v < g.num_vertices() && ok; ++v) {
      ++vertices_checked;
      std::vector<int> count(global + 1, 0);
      int local = 0;
      for (const Incidence& inc : g.incident(v)) {
        const int l = s.flow[inc.edge].DenominatorExponent();
        ++count[l];
        local = std::max(local, l);
      }
      // The largest exponent at v, and the largest in the whole flow,
      // always appear an even number of times.
      if (local > 0 && count[local] % 2 != 0) ok = false;
      if (global > 0 && count[global] % 2 != 0) ok = false;
      for (int l = 1; l < local; ++l) {
        if (count[l] % 2 != 0) ++literal_failures;
      }
    }
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = "flow " + std::to_string(i);
    }
  }
  std::ostringstream detail;
  detail << passed << "/" << kParityFlows << " flows, " << vertices_checked
         << " vertices: top exponent even everywhere; lower exponents odd at "
         << literal_failures << " (vertex, l) pairs (not required)";
  if (!first_failure.empty()) detail << "; first failure: " << first_failure;
  return {passed == kParityFlows, detail.str()};
}

}  // namespace toastflow::acceptance
