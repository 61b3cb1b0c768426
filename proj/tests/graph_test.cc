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


#include "toastflow/graph.h"

#include <deque>

#include <gtest/gtest.h>

#include "test_util.h"
#include "toastflow/errors.h"
#include "toastflow/random.h"

namespace toastflow {
namespace {

using testing::Block;
using testing::Small;

TEST(GraphTest, FromEdgesCanonicalizes) {
  const Graph g = Graph::FromEdges({30, 10, 20}, {{20, 10}, {30, 20}});
  ASSERT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.id(0), 10);
  EXPECT_EQ(g.id(2), 30);
  ASSERT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.FindEdge(2, 1), 1);
  EXPECT_FALSE(g.FindEdge(0, 2).has_value());
}

TEST(GraphTest, FromEdgesRejectsBadInput) {
  EXPECT_THROW(Graph::FromEdges({1, 2}, {{1, 1}}), FormatError);
  EXPECT_THROW(Graph::FromEdges({1, 2}, {{1, 2}, {2, 1}}), FormatError);
  EXPECT_THROW(Graph::FromEdges({1, 2}, {{1, 3}}), FormatError);
  EXPECT_THROW(Graph::FromEdges({1, 1}, {}), FormatError);
}

TEST(GraphTest, TorusIsFourRegular) {
  const Graph g = Graph::Torus(5, 4);
  EXPECT_EQ(g.num_vertices(), 20);
  EXPECT_EQ(g.num_edges(), 40);
  for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.degree(v), 4);
  EXPECT_EQ(g.GridVertex(-1, 0), 4);
  EXPECT_EQ(g.GridVertex(2, 5), 7);
  EXPECT_THROW(Graph::Torus(2, 5), DomainError);
}

TEST(GraphTest, IncidentSortedByNeighbor) {
  const Graph g = Graph::Torus(4, 4);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (size_t i = 1; i < inc.size(); ++i) {
      EXPECT_LT(inc[i - 1].neighbor, inc[i].neighbor);
    }
  }
}

TEST(NeighborhoodTest, InteriorVertexHasFourNeighbors) {
  const Graph g = Graph::Torus(8, 8);
  const VertexSet n = Neighborhood(g, {g.GridVertex(3, 3)}, 1);
  EXPECT_EQ(n, (VertexSet{g.GridVertex(3, 2), g.GridVertex(2, 3),
                          g.GridVertex(4, 3), g.GridVertex(3, 4)}));
}

TEST(NeighborhoodTest, WholeGraphHasEmptyNeighborhood) {
  const Graph g = Graph::Torus(8, 8);
  EXPECT_TRUE(Neighborhood(g, AllVertices(g), 3).empty());
}

// Distances counted by hand: 8 cells at distance 1, 12 at distance 2.
TEST(NeighborhoodTest, TwoByTwoBlockRadiusTwo) {
  const Graph g = Graph::Torus(8, 8);
  const VertexSet s = Block(g, 3, 3, 2, 2);
  EXPECT_EQ(Neighborhood(g, s, 1).size(), 8u);
  EXPECT_EQ(Neighborhood(g, s, 2).size(), 20u);
}

// Independent BFS distance count on random sets.
TEST(NeighborhoodTest, MatchesDistanceOracle) {
  const Graph g = Graph::Torus(10, 7);
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    VertexSet s;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (rng.Chance(1, 10)) s.push_back(v);
    }
    if (s.empty()) s.push_back(0);
    const int k = static_cast<int>(rng.Between(1, 3));
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<Vertex> queue;
    for (Vertex v : s) {
      dist[v] = 0;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(v)) {
        if (dist[inc.neighbor] < 0) {
          dist[inc.neighbor] = dist[v] + 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
    VertexSet expected;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (dist[v] >= 1 && dist[v] <= k) expected.push_back(v);
    }
    EXPECT_EQ(Neighborhood(g, s, k), expected);
  }
}

TEST(BoundaryTest, Examples) {
  const Graph g8 = Graph::Torus(8, 8);
  EXPECT_TRUE(Boundary(g8, AllVertices(g8)).empty());
  EXPECT_EQ(Boundary(g8, {5}), VertexSet{5});
  const Graph g16 = Graph::Torus(16, 16);
  EXPECT_EQ(Boundary(g16, Block(g16, 2, 2, 4, 4)).size(), 12u);
}

TEST(BoundaryTest, EmptyIffUnionOfComponents) {
  const Graph g = Small(6, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_TRUE(Boundary(g, {0, 1, 2}).empty());
  EXPECT_TRUE(Boundary(g, {0, 1, 2, 5}).empty());
  EXPECT_FALSE(Boundary(g, {0, 1}).empty());
  EXPECT_EQ(Boundary(g, {3, 4, 5}), (VertexSet{}));
}

TEST(FolnerTest, SquareBlocks) {
  const Graph g = Graph::Torus(32, 32);
  for (int s = 5; s <= 12; ++s) {
    EXPECT_TRUE(IsFolner(g, Block(g, 0, 0, s, s), Rational(4, s))) << s;
  }
  EXPECT_FALSE(IsFolner(g, {0}, Rational(1, 2)));
  EXPECT_THROW(IsFolner(g, {}, Rational(1)), DomainError);
}

TEST(HoleFreeTest, SolidBlockAndRing) {
  const Graph g = Graph::Torus(9, 9);
  const VertexSet solid = Block(g, 3, 3, 3, 3);
  EXPECT_TRUE(IsHoleFree(g, solid));
  const VertexSet ring = SetDifference(solid, {g.GridVertex(4, 4)});
  EXPECT_FALSE(IsHoleFree(g, ring));
}

TEST(HoleFreeTest, Errors) {
  const Graph torus = Graph::Torus(9, 9);
  EXPECT_THROW(IsHoleFree(torus, {}), DomainError);
  EXPECT_THROW(IsHoleFree(torus, AllVertices(torus)), DomainError);
  EXPECT_THROW(IsHoleFree(testing::CycleGraph(5), {0}), UnsupportedInstance);
}

TEST(AnnulusTest, Examples) {
  const Graph g8 = Graph::Torus(8, 8);
  EXPECT_EQ(Neighborhood(g8, {g8.GridVertex(4, 4)}, 2).size(), 12u);
  EXPECT_TRUE(AnnulusConnected(g8, {g8.GridVertex(4, 4)}));
  const Graph g16 = Graph::Torus(16, 16);
  EXPECT_TRUE(AnnulusConnected(g16, Block(g16, 3, 3, 2, 5)));
  const VertexSet ring = SetDifference(Block(g8, 2, 2, 3, 3), {g8.GridVertex(3, 3)});
  EXPECT_THROW(AnnulusConnected(g8, ring), DomainError);
}

TEST(InducedTest, ComponentsAndEdges) {
  const Graph g = Small(6, {{0, 1}, {1, 2}, {3, 4}, {2, 5}});
  const auto parts = InducedComponents(g, {0, 1, 3, 4, 5});
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1}));
  EXPECT_EQ(parts[1], (VertexSet{3, 4}));
  EXPECT_EQ(parts[2], (VertexSet{5}));
  EXPECT_TRUE(IsInducedConnected(g, {}));
  EXPECT_EQ(InducedEdges(g, {0, 1, 2}).size(), 2u);
}

TEST(SetTest, Utilities) {
  VertexSet s{3, 1, 3, 2};
  EXPECT_EQ(Normalize(s), (VertexSet{1, 2, 3}));
  EXPECT_EQ(SetUnion({1, 4}, {2, 4}), (VertexSet{1, 2, 4}));
  EXPECT_EQ(SetDifference({1, 2, 4}, {2}), (VertexSet{1, 4}));
  EXPECT_TRUE(IsSubset({1, 4}, {1, 2, 4}));
  EXPECT_FALSE(IsSubset({1, 5}, {1, 2, 4}));
  EXPECT_THROW(CheckVertices(Graph::Torus(3, 3), VertexSet{9}), DomainError);
}

}  // namespace
}  // namespace toastflow
