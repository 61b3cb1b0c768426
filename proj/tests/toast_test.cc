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


#include "toastflow/toast.h"

#include <functional>

#include <gtest/gtest.h>

#include "test_util.h"
#include "toastflow/errors.h"

namespace toastflow {
namespace {

using testing::Block;
using testing::RootOnly;

TEST(ToastTest, ConstructorRejectsBrokenForests) {
  EXPECT_THROW(Toast({{0, std::nullopt, {1}}, {0, std::nullopt, {2}}}),
               FormatError);
  EXPECT_THROW(Toast({{0, std::nullopt, {}}}), FormatError);
  EXPECT_THROW(Toast({{0, 7, {1}}}), FormatError);
  EXPECT_THROW(Toast({{0, 1, {1}}, {1, 0, {2}}}), FormatError);
}

TEST(ToastTest, ForestQueries) {
  const Toast t({{5, std::nullopt, {0, 1, 2}}, {2, 5, {1}}, {9, 2, {1}}});
  EXPECT_EQ(t.tiles()[0].id, 2);
  EXPECT_EQ(t.IndexOf(9), 2);
  EXPECT_THROW(t.IndexOf(4), DomainError);
  EXPECT_EQ(t.roots(), std::vector<int>{1});
  EXPECT_TRUE(t.IsAncestor(1, 2));
  EXPECT_FALSE(t.IsAncestor(2, 1));
  EXPECT_EQ(t.Descendants(1), (std::vector<int>{0, 2}));
}

TEST(ValidateToastTest, WholeTorusIsValid) {
  const Graph g = Graph::Torus(8, 8);
  EXPECT_TRUE(ValidateToast(g, RootOnly(g)).ok());
}

TEST(ValidateToastTest, AdjacentParentlessBlocks) {
  const Graph g = Graph::Torus(8, 8);
  const Toast t({{1, std::nullopt, Block(g, 0, 0, 2, 2)},
                 {2, std::nullopt, Block(g, 2, 0, 2, 2)}});
  const ToastReport r = ValidateToast(g, t);
  EXPECT_TRUE(r.Has(1));
  EXPECT_TRUE(r.Has(2, 1));
  EXPECT_TRUE(r.Has(2, 2));
}

TEST(ValidateToastTest, MiddleColumnSplitsStrip) {
  // 3 wide, 5 tall parent strip; the middle column leaves two halves.
  const Graph g = Graph::Grid(3, 5);
  const Toast t({{0, std::nullopt, AllVertices(g)},
                 {1, 0, Block(g, 1, 0, 1, 5)}});
  const ToastReport r = ValidateToast(g, t);
  EXPECT_TRUE(r.Has(3, 0));
}

TEST(ValidateToastTest, IdenticalTilesRejected) {
  const Graph g = Graph::Torus(8, 8);
  const Toast t({{0, std::nullopt, AllVertices(g)}, {1, 0, AllVertices(g)}});
  EXPECT_TRUE(ValidateToast(g, t).Has(2));
}

TEST(ValidateToastTest, UnknownVertexIsFormatError) {
  const Graph g = Graph::Torus(3, 3);
  EXPECT_THROW(ValidateToast(g, Toast({{0, std::nullopt, {0, 99}}})),
               FormatError);
}

TEST(StratifyTest, Examples) {
  const Graph g = Graph::Torus(16, 16);
  EXPECT_EQ(Stratify(RootOnly(g)).levels,
            (std::vector<std::vector<TileId>>{{0}}));
  const Toast chain({{0, std::nullopt, AllVertices(g)},
                     {1, 0, Block(g, 2, 2, 10, 10)},
                     {2, 1, Block(g, 5, 5, 3, 3)}});
  EXPECT_TRUE(ValidateToast(g, chain).ok());
  EXPECT_EQ(Stratify(chain).levels,
            (std::vector<std::vector<TileId>>{{2}, {1}, {0}}));
  EXPECT_EQ(Stratify(chain).levels, Stratify(chain).levels);
}

// Level is one more than the tallest subtree, computed recursively here.
TEST(StratifyTest, MatchesRecursiveHeight) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Toast t = GenerateTorusToast({32, 32, 8, 2, 3, seed});
    std::function<int(int)> height = [&](int i) {
      int h = 0;
      for (int c : t.children(i)) h = std::max(h, height(c) + 1);
      return h;
    };
    const ToastLevels levels = Stratify(t);
    EXPECT_EQ(static_cast<int>(levels.levels.size()), height(t.roots()[0]) + 1);
    for (size_t l = 0; l < levels.levels.size(); ++l) {
      for (TileId id : levels.levels[l]) {
        EXPECT_EQ(height(t.IndexOf(id)), static_cast<int>(l));
      }
    }
  }
}

TEST(FreeRegionTest, PartitionsCoveredVertices) {
  const Graph g = Graph::Torus(32, 32);
  const Toast t = GenerateTorusToast({32, 32, 8, 2, 3, 4});
  std::vector<int> hits(g.num_vertices(), 0);
  for (const Tile& tile : t.tiles()) {
    for (Vertex v : FreeRegion(t, tile.id)) ++hits[v];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(hits[v], 1);
  const TileId leaf = Stratify(t).levels[0][0];
  EXPECT_EQ(FreeRegion(t, leaf), t.tile(leaf).vertices);
  EXPECT_THROW(FreeRegion(t, 1000), DomainError);
}

TEST(KToastTest, ChildNearParentRim) {
  const Graph g = Graph::Torus(16, 16);
  // The child's 3-ball leaves the parent, its 2-ball does not.
  const Toast t({{0, std::nullopt, AllVertices(g)},
                 {1, 0, Block(g, 2, 2, 8, 8)},
                 {2, 1, Block(g, 4, 4, 3, 3)}});
  EXPECT_TRUE(ValidateToast(g, t).ok());
  EXPECT_TRUE(IsKToast(g, t, 1));
  EXPECT_TRUE(IsKToast(g, t, 2));
  EXPECT_FALSE(IsKToast(g, t, 3));
}

TEST(GeneratorTest, SingleLevel) {
  const Toast t = GenerateTorusToast({12, 12, 12, 1, 3, 0});
  ASSERT_EQ(t.size(), 2);
  EXPECT_EQ(t.tile(1).vertices.size(), 81u);
  EXPECT_EQ(t.tile(1).parent, 0);
}

TEST(GeneratorTest, SixteenByEight) {
  const Graph g = Graph::Torus(16, 16);
  const Toast t = GenerateTorusToast({16, 16, 8, 2, 3, 0});
  ASSERT_EQ(t.size(), 5);
  for (TileId id = 1; id <= 4; ++id) EXPECT_EQ(t.tile(id).vertices.size(), 25u);
  EXPECT_TRUE(ValidateToast(g, t).ok());
}

TEST(GeneratorTest, ThreeLevels) {
  const Graph g = Graph::Torus(32, 32);
  for (uint64_t seed = 0; seed < 4; ++seed) {
    const Toast t = GenerateTorusToast({32, 32, 8, 2, 3, seed});
    const ToastLevels levels = Stratify(t);
    ASSERT_EQ(levels.levels.size(), 3u);
    EXPECT_EQ(levels.levels[0].size(), 16u);
    EXPECT_EQ(levels.levels[1].size(), 4u);
    EXPECT_EQ(levels.levels[2].size(), 1u);
    EXPECT_FALSE(ValidateToast(g, t).Has(3));
    EXPECT_TRUE(ValidateToast(g, t).ok());
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(IsKToast(g, t, k));
    EXPECT_TRUE(KToastImpliesConnected(g, t));
  }
}

TEST(GeneratorTest, SameLevelTilesAreFarApart) {
  const Graph g = Graph::Torus(24, 24);
  const Toast t = GenerateTorusToast({24, 24, 12, 2, 4, 9});
  const ToastLevels levels = Stratify(t);
  for (const auto& level : levels.levels) {
    for (size_t i = 0; i < level.size(); ++i) {
      const VertexSet ball =
          SetUnion(t.tile(level[i]).vertices,
                   Neighborhood(g, t.tile(level[i]).vertices, 3));
      for (size_t j = i + 1; j < level.size(); ++j) {
        for (Vertex v : t.tile(level[j]).vertices) {
          EXPECT_FALSE(std::binary_search(ball.begin(), ball.end(), v));
        }
      }
    }
  }
}

TEST(GeneratorTest, Deterministic) {
  EXPECT_EQ(GenerateTorusToast({32, 32, 8, 2, 3, 17}),
            GenerateTorusToast({32, 32, 8, 2, 3, 17}));
}

TEST(GeneratorTest, ParameterErrors) {
  EXPECT_THROW(GenerateTorusToast({16, 12, 8, 2, 3, 0}), ParameterError);
  EXPECT_THROW(GenerateTorusToast({16, 16, 8, 2, 2, 0}), ParameterError);
  EXPECT_THROW(GenerateTorusToast({16, 16, 5, 2, 3, 0}), ParameterError);
  EXPECT_THROW(GenerateTorusToast({20, 20, 8, 2, 3, 0}), ParameterError);
  EXPECT_THROW(GenerateTorusToast({64, 64, 8, 2, 3, 0}), ParameterError);
}

TEST(KToastImpliesConnectedTest, RejectsUnmetPreconditions) {
  const Graph g = Graph::Torus(16, 16);
  const Toast hugging({{0, std::nullopt, AllVertices(g)},
                       {1, 0, Block(g, 2, 2, 8, 8)},
                       {2, 1, Block(g, 3, 3, 3, 3)}});
  EXPECT_THROW(KToastImpliesConnected(g, hugging), DomainError);
}

}  // namespace
}  // namespace toastflow
