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


#include "toastflow/oracle.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "toastflow/errors.h"
#include "toastflow/random.h"

namespace toastflow {
namespace {

using testing::CycleGraph;
using testing::PathGraph;
using testing::Small;

TEST(MaxFlowTest, DiamondWithBottleneck) {
  MaxFlow mf(4);
  mf.AddArc(0, 1, 3);
  mf.AddArc(0, 2, 2);
  const int mid = mf.AddArc(1, 2, 5);
  mf.AddArc(1, 3, 1);
  mf.AddArc(2, 3, 4);
  EXPECT_EQ(mf.Solve(0, 3), 5);
  EXPECT_EQ(mf.Flow(mid), 2);
}

TEST(FeasibleWithBoundsTest, LowerBoundForcesCirculation) {
  const Graph g = CycleGraph(3);
  // Edges (0,1), (0,2), (1,2); at least one unit must go 0 -> 1.
  const auto x = FeasibleWithBounds(g, {0, 0, 0}, {1, -2, -2}, {2, 2, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_GE((*x)[0], 1);
  EXPECT_EQ((*x)[0] + (*x)[1], 0);
  EXPECT_EQ(-(*x)[0] + (*x)[2], 0);
  EXPECT_FALSE(FeasibleWithBounds(g, {0, 0, 0}, {1, 0, -2}, {2, 2, 2}).has_value());
}

TEST(FeasibleIntegralFlowTest, SingleEdge) {
  const Graph g = Small(2, {{0, 1}});
  EXPECT_TRUE(FeasibleIntegralFlow({g, {1, -1}, std::vector<int64_t>{1}}).has_value());
  EXPECT_FALSE(FeasibleIntegralFlow({g, {2, -2}, std::vector<int64_t>{1}}).has_value());
  EXPECT_THROW(FeasibleIntegralFlow({g, {1, -1}, std::nullopt}), DomainError);
}

TEST(LexLeastTest, FourCycleCirculation) {
  const Graph g = CycleGraph(4);
  const auto flow = LexLeastIntegralFlow({g, {0, 0, 0, 0}, std::vector<int64_t>(4, 1)});
  ASSERT_TRUE(flow.has_value());
  // (0,1) = -1 is reachable by sending one unit around backwards.
  EXPECT_EQ((*flow)[0], Rational(-1));
  EXPECT_TRUE(VerifyFlow(*flow, {g, {0, 0, 0, 0}, std::vector<int64_t>(4, 1)}).ok());
}

TEST(EnumerateTest, SmallCounts) {
  const Graph tri = CycleGraph(3);
  EXPECT_EQ(EnumerateIntegralFlows({tri, {0, 0, 0}, std::nullopt}, 1).size(), 3u);
  const Graph path = PathGraph(3);
  const auto one = EnumerateIntegralFlows({path, {1, 0, -1}, std::nullopt}, 2);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0][0], Rational(1));
  EXPECT_EQ(one[0][1], Rational(1));
  EXPECT_THROW(EnumerateIntegralFlows({Graph::Torus(3, 3), std::vector<int64_t>(9, 0),
                                       std::nullopt}, 1),
               RefusalError);
}

TEST(EnumerateTest, LexicographicOrder) {
  const Graph g = CycleGraph(4);
  const auto all = EnumerateIntegralFlows({g, {0, 0, 0, 0}, std::nullopt}, 2);
  ASSERT_EQ(all.size(), 5u);
  for (size_t i = 1; i < all.size(); ++i) {
    EXPECT_TRUE(std::lexicographical_compare(
        all[i - 1].values().begin(), all[i - 1].values().end(),
        all[i].values().begin(), all[i].values().end()));
  }
}

// Feasibility and the lex-least flow agree with brute force.
TEST(OracleAgreementTest, RandomSmallGraphs) {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.Between(2, 5));
    std::vector<std::pair<int64_t, int64_t>> edges;
    std::vector<int64_t> parent(n, -1);
    for (int i = 1; i < n; ++i) {
      parent[i] = static_cast<int64_t>(rng.Below(i));
      edges.emplace_back(parent[i], i);
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (parent[v] != u && rng.Chance(1, 2)) edges.emplace_back(u, v);
      }
    }
    const Graph g = Small(n, edges);
    if (g.num_edges() > 8) continue;
    std::vector<int64_t> demand(n, 0);
    for (int i = 0; i + 1 < n; ++i) {
      demand[i] = rng.Between(-2, 2);
      demand[n - 1] -= demand[i];
    }
    const int64_t c = rng.Between(1, 2);
    const FlowProblem p{g, demand, std::vector<int64_t>(g.num_edges(), c)};
    const std::vector<Flow> all = EnumerateIntegralFlows(p, c);
    const auto feasible = FeasibleIntegralFlow(p);
    ASSERT_EQ(feasible.has_value(), !all.empty());
    if (!feasible) continue;
    EXPECT_TRUE(VerifyFlow(*feasible, p).ok());
    EXPECT_EQ(*LexLeastIntegralFlow(p), all.front());
  }
}

TEST(RectangleCycleTest, IsSimpleCircuit) {
  const Graph g = Graph::Torus(8, 8);
  const OrientedCycle c = RectangleCycle(g, 6, 6, 3, 2);
  EXPECT_EQ(c.length(), 10);
  Flow flow(g);
  for (const auto& [e, sign] : c.Steps(g)) flow.Add(e, Rational(sign));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_TRUE(Divergence(g, flow, v).IsZero());
  }
}

TEST(RandomInstanceTest, DeterministicAndConsistent) {
  InstanceParams params;
  params.toast = {16, 16, 8, 2, 3, 5};
  params.circuit_count = 12;
  params.denominators = {3, 9};
  params.seed = 5;
  const InstanceBundle a = RandomInstance(params);
  const InstanceBundle b = RandomInstance(params);
  EXPECT_EQ(a.phi, b.phi);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.problem.demand, b.problem.demand);
  EXPECT_TRUE(CheckBundle(a));
  EXPECT_TRUE(a.witness.IsIntegral());
  for (int64_t f : a.problem.demand) EXPECT_LE(std::abs(f), 2);
  params.seed = 6;
  EXPECT_NE(RandomInstance(params).phi, a.phi);
}

TEST(CheckBundleTest, DetectsBrokenWitness) {
  InstanceParams params;
  params.toast = {16, 16, 8, 2, 3, 1};
  params.circuit_count = 3;
  params.seed = 1;
  InstanceBundle b = RandomInstance(params);
  b.witness.Add(0, Rational(1));
  EXPECT_FALSE(CheckBundle(b));
}

}  // namespace
}  // namespace toastflow
