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


#include <deque>

#include "acceptance.h"

namespace toastflow::acceptance {

std::vector<Rational> NetOutflow(const Graph& graph, const Flow& flow) {
  std::vector<Rational> out(graph.num_vertices());
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    out[graph.edge(e).u] += flow[e];
    out[graph.edge(e).v] -= flow[e];
  }
  return out;
}

bool AddAlong(const Graph& graph, const std::vector<Vertex>& walk,
              const Rational& amount, Flow& flow) {
  if (walk.size() < 2) return false;
  for (size_t i = 0; i < walk.size(); ++i) {
    const Vertex a = walk[i];
    const Vertex b = walk[(i + 1) % walk.size()];
    const std::optional<EdgeId> e = graph.FindEdge(a, b);
    if (!e) return false;
    flow.Add(*e, graph.edge(*e).u == a ? amount : -amount);
  }
  return true;
}

Rational MaxGap(const Flow& a, const Flow& b) {
  Rational best;
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    const Rational gap = (a[e] - b[e]).Abs();
    if (best < gap) best = gap;
  }
  return best;
}

int CountPieces(const Graph& graph, const VertexSet& set) {
  std::vector<char> in(graph.num_vertices(), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<char> seen(graph.num_vertices(), 0);
  int pieces = 0;
  for (Vertex start : set) {
    if (seen[start]) continue;
    ++pieces;
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : graph.incident(v)) {
        if (in[inc.neighbor] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  return pieces;
}

}  // namespace toastflow::acceptance
