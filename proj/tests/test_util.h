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


#ifndef TOASTFLOW_TESTS_TEST_UTIL_H_
#define TOASTFLOW_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "toastflow/graph.h"
#include "toastflow/parity.h"
#include "toastflow/toast.h"

namespace toastflow::testing {

// Vertices 0..n-1 with the given edges.
inline Graph Small(int n, const std::vector<std::pair<int64_t, int64_t>>& edges) {
  std::vector<int64_t> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return Graph::FromEdges(ids, edges);
}

inline Graph CycleGraph(int n) {
  std::vector<std::pair<int64_t, int64_t>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Small(n, edges);
}

inline Graph PathGraph(int n) {
  std::vector<std::pair<int64_t, int64_t>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Small(n, edges);
}

// w x h block with lower-left corner (x, y) on a grid graph.
inline VertexSet Block(const Graph& g, int x, int y, int w, int h) {
  VertexSet out;
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) out.push_back(g.GridVertex(x + i, y + j));
  }
  return Normalize(out);
}

inline Toast RootOnly(const Graph& g) {
  return Toast({Tile{0, std::nullopt, AllVertices(g)}});
}

// Each vertex's degree parity in `edges` matches membership in `odd`.
inline bool HasParity(const Graph& g, const EdgeSet& edges,
                      const VertexSet& odd) {
  const std::vector<int> degree = Degrees(g, edges);
  const std::vector<char> is_odd = MakeMask(g.num_vertices(), odd);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if ((degree[v] % 2 != 0) != (is_odd[v] != 0)) return false;
  }
  return true;
}

}  // namespace toastflow::testing

#endif  // TOASTFLOW_TESTS_TEST_UTIL_H_
