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


#include "toastflow/parity.h"

#include <algorithm>
#include <deque>
#include <string>

#include "toastflow/errors.h"

namespace toastflow {

EdgeSet::EdgeSet(const Graph& graph, const std::vector<EdgeId>& edges)
    : EdgeSet(graph) {
  for (EdgeId e : edges) Insert(e);
}

void EdgeSet::Insert(EdgeId e) {
  if (!member_[e]) {
    member_[e] = 1;
    ++count_;
  }
}

void EdgeSet::Erase(EdgeId e) {
  if (member_[e]) {
    member_[e] = 0;
    --count_;
  }
}

void EdgeSet::Toggle(EdgeId e) {
  if (member_[e]) {
    Erase(e);
  } else {
    Insert(e);
  }
}

std::vector<EdgeId> EdgeSet::edges() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (EdgeId e = 0; e < host_edges(); ++e) {
    if (member_[e]) out.push_back(e);
  }
  return out;
}

std::vector<int> Degrees(const Graph& graph, const EdgeSet& edges) {
  std::vector<int> degree(graph.num_vertices(), 0);
  for (EdgeId e : edges.edges()) {
    ++degree[graph.edge(e).u];
    ++degree[graph.edge(e).v];
  }
  return degree;
}

std::vector<std::pair<EdgeId, int>> OrientedCycle::Steps(
    const Graph& graph) const {
  std::vector<std::pair<EdgeId, int>> steps;
  steps.reserve(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Vertex a = vertices[i];
    const Vertex b = vertices[(i + 1) % vertices.size()];
    auto e = graph.FindEdge(a, b);
    if (!e) throw DomainError("cycle uses a non-edge");
    steps.emplace_back(*e, a < b ? 1 : -1);
  }
  return steps;
}

namespace {

// Lexicographic BFS path from s to t inside the masked region; edges in
// path order.
std::vector<EdgeId> RegionPath(const Graph& graph,
                               const std::vector<char>& in_region, Vertex s,
                               Vertex t) {
  std::vector<EdgeId> via(graph.num_vertices(), -1);
  std::vector<char> seen(graph.num_vertices(), 0);
  std::deque<Vertex> queue{s};
  seen[s] = 1;
  while (!queue.empty() && !seen[t]) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : graph.incident(v)) {
      if (in_region[inc.neighbor] && !seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        via[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
  }
  std::vector<EdgeId> path;
  if (!seen[t]) return path;
  for (Vertex v = t; v != s;) {
    const EdgeId e = via[v];
    path.push_back(e);
    v = graph.edge(e).u == v ? graph.edge(e).v : graph.edge(e).u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

EdgeSet OddParitySubgraph(const Graph& graph, const VertexSet& region,
                          const VertexSet& odd) {
  CheckVertices(graph, region);
  CheckVertices(graph, odd);
  if (odd.size() % 2 != 0) {
    throw InfeasibleInput("parity subgraph needs an even number of odd "
                          "vertices, got " + std::to_string(odd.size()));
  }
  if (!IsSubset(odd, region)) {
    throw DomainError("odd vertices must lie in the region");
  }
  if (!IsInducedConnected(graph, region)) {
    throw InfeasibleInput("parity subgraph region is disconnected");
  }
  EdgeSet result(graph);
  const std::vector<char> in_region = MakeMask(graph.num_vertices(), region);
  for (size_t i = 0; i + 1 < odd.size(); i += 2) {
    for (EdgeId e : RegionPath(graph, in_region, odd[i], odd[i + 1])) {
      result.Toggle(e);
    }
  }
  return result;
}

std::vector<OrientedCycle> CycleDecompose(const Graph& graph,
                                          const EdgeSet& edges) {
  const std::vector<int> degree = Degrees(graph, edges);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (degree[v] % 2 != 0) {
      throw InfeasibleInput("vertex " + std::to_string(graph.id(v)) +
                            " has odd degree " + std::to_string(degree[v]));
    }
  }
  EdgeSet unused = edges;
  // Next incidence to inspect per vertex; adjacency lists are sorted, so the
  // walk always takes the smallest unused neighbour.
  std::vector<int> cursor(graph.num_vertices(), 0);
  auto next_unused = [&](Vertex v) -> const Incidence* {
    auto inc = graph.incident(v);
    while (cursor[v] < static_cast<int>(inc.size()) &&
           !unused.contains(inc[cursor[v]].edge)) {
      ++cursor[v];
    }
    return cursor[v] < static_cast<int>(inc.size()) ? &inc[cursor[v]]
                                                    : nullptr;
  };

  std::vector<OrientedCycle> cycles;
  std::vector<int> position(graph.num_vertices(), -1);
  for (Vertex start = 0; start < graph.num_vertices(); ++start) {
    while (next_unused(start) != nullptr) {
      std::vector<Vertex> path{start};
      position[start] = 0;
      while (!path.empty()) {
        const Vertex v = path.back();
        const Incidence* inc = next_unused(v);
        if (inc == nullptr) {
          // Only the walk's start can run out of edges in an even graph.
          position[v] = -1;
          path.pop_back();
          continue;
        }
        unused.Erase(inc->edge);
        const Vertex w = inc->neighbor;
        if (position[w] < 0) {
          position[w] = static_cast<int>(path.size());
          path.push_back(w);
          continue;
        }
        // Closed a cycle at w: cut it off the walk, keep w on the path.
        OrientedCycle cycle;
        cycle.vertices.assign(path.begin() + position[w], path.end());
        for (size_t i = position[w] + 1; i < path.size(); ++i) {
          position[path[i]] = -1;
        }
        path.resize(position[w] + 1);
        cycles.push_back(std::move(cycle));
      }
    }
  }
  return cycles;
}

std::optional<OrientedCycle> FindCycleThrough(const Graph& graph, EdgeId e,
                                              const EdgeSet& allowed) {
  const Vertex u = graph.edge(e).u;
  const Vertex v = graph.edge(e).v;
  std::vector<Vertex> from(graph.num_vertices(), -1);
  std::deque<Vertex> queue{v};
  from[v] = v;
  while (!queue.empty() && from[u] < 0) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : graph.incident(x)) {
      if (inc.edge == e || !allowed.contains(inc.edge)) continue;
      if (from[inc.neighbor] < 0) {
        from[inc.neighbor] = x;
        queue.push_back(inc.neighbor);
      }
    }
  }
  if (from[u] < 0) return std::nullopt;
  // Path v -> ... -> u, read backwards from u; the cycle is u, v, ..., .
  std::vector<Vertex> back;
  for (Vertex x = u; x != v; x = from[x]) back.push_back(x);
  back.push_back(v);
  OrientedCycle cycle;
  cycle.vertices.push_back(u);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    if (*it != u) cycle.vertices.push_back(*it);
  }
  return cycle;
}

}  // namespace toastflow
