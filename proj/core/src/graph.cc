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

#include <algorithm>
#include <deque>
#include <string>

#include "toastflow/errors.h"

namespace toastflow {

Graph Graph::FromEdges(std::vector<int64_t> vertex_ids,
                       const std::vector<std::pair<int64_t, int64_t>>& edges) {
  Graph g;
  std::sort(vertex_ids.begin(), vertex_ids.end());
  if (std::adjacent_find(vertex_ids.begin(), vertex_ids.end()) !=
      vertex_ids.end()) {
    throw FormatError("repeated vertex id");
  }
  g.ids_ = std::move(vertex_ids);
  for (Vertex v = 0; v < g.num_vertices(); ++v) g.index_of_[g.ids_[v]] = v;

  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = g.VertexOf(a);
    auto ib = g.VertexOf(b);
    if (!ia || !ib) {
      throw FormatError("edge [" + std::to_string(a) + "," +
                        std::to_string(b) + "] uses an undeclared vertex");
    }
    if (*ia == *ib) {
      throw FormatError("self-loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back({std::min(*ia, *ib), std::max(*ia, *ib)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw FormatError("repeated edge [" + std::to_string(g.ids_[dup->u]) +
                      "," + std::to_string(g.ids_[dup->v]) + "]");
  }
  g.BuildAdjacency();
  return g;
}

namespace {

Graph MakeGrid(int width, int height, bool wraps) {
  std::vector<int64_t> ids(static_cast<size_t>(width) * height);
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int64_t>(i);
  std::vector<std::pair<int64_t, int64_t>> edges;
  auto id = [width](int x, int y) { return int64_t{y} * width + x; };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x + 1 < width) {
        edges.emplace_back(id(x, y), id(x + 1, y));
      } else if (wraps) {
        edges.emplace_back(id(x, y), id(0, y));
      }
      if (y + 1 < height) {
        edges.emplace_back(id(x, y), id(x, y + 1));
      } else if (wraps) {
        edges.emplace_back(id(x, y), id(x, 0));
      }
    }
  }
  return Graph::FromEdges(std::move(ids), edges);
}

}  // namespace

Graph Graph::Torus(int width, int height) {
  if (width < 3 || height < 3) {
    throw DomainError("torus dimensions must be at least 3");
  }
  Graph g = MakeGrid(width, height, /*wraps=*/true);
  g.grid_ = GridShape{width, height, true};
  return g;
}

Graph Graph::Grid(int width, int height) {
  if (width < 1 || height < 1) {
    throw DomainError("grid dimensions must be positive");
  }
  Graph g = MakeGrid(width, height, /*wraps=*/false);
  g.grid_ = GridShape{width, height, false};
  return g;
}

void Graph::BuildAdjacency() {
  const int n = num_vertices();
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    adjacency_[fill[edges_[e].u]++] = {edges_[e].v, e};
    adjacency_[fill[edges_[e].v]++] = {edges_[e].u, e};
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
  }
}

std::optional<EdgeId> Graph::FindEdge(Vertex a, Vertex b) const {
  if (!IsVertex(a) || !IsVertex(b)) return std::nullopt;
  auto range = incident(a);
  auto it = std::lower_bound(
      range.begin(), range.end(), b,
      [](const Incidence& inc, Vertex key) { return inc.neighbor < key; });
  if (it == range.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

std::optional<Vertex> Graph::VertexOf(int64_t id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::GridVertex(int x, int y) const {
  if (!grid_) throw UnsupportedInstance("graph has no grid shape");
  if (grid_->wraps) {
    x = ((x % grid_->width) + grid_->width) % grid_->width;
    y = ((y % grid_->height) + grid_->height) % grid_->height;
  } else if (x < 0 || y < 0 || x >= grid_->width || y >= grid_->height) {
    throw DomainError("grid coordinate out of range");
  }
  return y * grid_->width + x;
}

std::pair<int, int> Graph::GridCoordinates(Vertex v) const {
  if (!grid_) throw UnsupportedInstance("graph has no grid shape");
  return {v % grid_->width, v / grid_->width};
}

// --- vertex-set utilities ---------------------------------------------------

VertexSet& Normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

std::vector<char> MakeMask(int num_vertices, std::span<const Vertex> set) {
  std::vector<char> mask(num_vertices, 0);
  for (Vertex v : set) mask[v] = 1;
  return mask;
}

VertexSet AllVertices(const Graph& graph) {
  VertexSet all(graph.num_vertices());
  for (Vertex v = 0; v < graph.num_vertices(); ++v) all[v] = v;
  return all;
}

VertexSet SetDifference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet SetUnion(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool IsSubset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void CheckVertices(const Graph& graph, std::span<const Vertex> set) {
  for (Vertex v : set) {
    if (!graph.IsVertex(v)) {
      throw DomainError("unknown vertex index " + std::to_string(v));
    }
  }
}

std::vector<VertexSet> InducedComponents(const Graph& graph,
                                         const VertexSet& set) {
  CheckVertices(graph, set);
  std::vector<char> in_set = MakeMask(graph.num_vertices(), set);
  std::vector<char> seen(graph.num_vertices(), 0);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex start : set) {
    if (seen[start]) continue;
    VertexSet component;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const Incidence& inc : graph.incident(v)) {
        if (in_set[inc.neighbor] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool IsInducedConnected(const Graph& graph, const VertexSet& set) {
  return InducedComponents(graph, set).size() <= 1;
}

std::vector<EdgeId> InducedEdges(const Graph& graph, const VertexSet& set) {
  std::vector<char> in_set = MakeMask(graph.num_vertices(), set);
  std::vector<EdgeId> out;
  for (Vertex v : set) {
    for (const Incidence& inc : graph.incident(v)) {
      if (inc.neighbor > v && in_set[inc.neighbor]) out.push_back(inc.edge);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Neighborhood(const Graph& graph, const VertexSet& set, int k) {
  if (k < 1) throw DomainError("neighborhood radius must be positive");
  CheckVertices(graph, set);
  std::vector<int> dist(graph.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex v : set) {
    dist[v] = 0;
    queue.push_back(v);
  }
  VertexSet out;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] == k) continue;
    for (const Incidence& inc : graph.incident(v)) {
      if (dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[v] + 1;
        out.push_back(inc.neighbor);
        queue.push_back(inc.neighbor);
      }
    }
  }
  return Normalize(out);
}

VertexSet Boundary(const Graph& graph, const VertexSet& set) {
  CheckVertices(graph, set);
  std::vector<char> in_set = MakeMask(graph.num_vertices(), set);
  VertexSet out;
  for (Vertex v : set) {
    for (const Incidence& inc : graph.incident(v)) {
      if (!in_set[inc.neighbor]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool IsFolner(const Graph& graph, const VertexSet& set,
              const Rational& epsilon) {
  if (set.empty()) throw DomainError("Folner test on an empty set");
  const auto boundary_size = static_cast<int64_t>(Boundary(graph, set).size());
  return Rational(boundary_size) <
         epsilon * Rational(static_cast<int64_t>(set.size()));
}

bool IsHoleFree(const Graph& graph, const VertexSet& set) {
  if (!graph.grid()) {
    throw UnsupportedInstance(
        "hole-freeness is only defined for torus or grid graphs");
  }
  if (set.empty() || static_cast<int>(set.size()) >= graph.num_vertices()) {
    throw DomainError("hole-freeness needs a non-empty proper subset");
  }
  VertexSet complement = SetDifference(AllVertices(graph), set);
  return InducedComponents(graph, complement).size() == 1;
}

bool AnnulusConnected(const Graph& graph, const VertexSet& set) {
  if (!IsInducedConnected(graph, set) || !IsHoleFree(graph, set)) {
    throw DomainError("annulus check needs a connected hole-free set");
  }
  return IsInducedConnected(graph, Neighborhood(graph, set, 2));
}

}  // namespace toastflow
