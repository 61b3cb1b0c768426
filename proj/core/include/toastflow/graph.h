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


#ifndef TOASTFLOW_GRAPH_H_
#define TOASTFLOW_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toastflow/rational.h"

namespace toastflow {

// Dense vertex index in [0, num_vertices). Index order equals external id
// order, so the canonical orientation u < v is the same in both.
using Vertex = int;
using EdgeId = int;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Planar embedding metadata for grid-like graphs. Hole-freeness and the
// torus action are only defined when this is present.
struct GridShape {
  int width = 0;
  int height = 0;
  bool wraps = false;

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

// Finite simple undirected graph. Edges are stored once, in canonical
// orientation, sorted lexicographically; EdgeId is the position in that
// order. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws FormatError on self-loops, repeated edges, repeated vertex ids or
  // edge endpoints that are not declared vertices.
  static Graph FromEdges(std::vector<int64_t> vertex_ids,
                         const std::vector<std::pair<int64_t, int64_t>>& edges);

  // 4-regular grid on Z_w x Z_h, vertex (x, y) has id y * w + x.
  // Requires w, h >= 3.
  static Graph Torus(int width, int height);

  // Rectangular grid without wraparound, same vertex numbering.
  static Graph Grid(int width, int height);

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  // Incident edges sorted by neighbor index.
  std::span<const Incidence> incident(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> FindEdge(Vertex a, Vertex b) const;
  bool IsVertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

  int64_t id(Vertex v) const { return ids_[v]; }
  std::span<const int64_t> ids() const { return ids_; }
  std::optional<Vertex> VertexOf(int64_t id) const;

  const std::optional<GridShape>& grid() const { return grid_; }
  // Requires a grid shape; wraps coordinates on a torus.
  Vertex GridVertex(int x, int y) const;
  std::pair<int, int> GridCoordinates(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_ && a.grid_ == b.grid_;
  }

 private:
  void BuildAdjacency();

  std::vector<int64_t> ids_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Incidence> adjacency_;
  std::unordered_map<int64_t, Vertex> index_of_;
  std::optional<GridShape> grid_;
};

// --- vertex-set utilities ---------------------------------------------------

// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet& Normalize(VertexSet& set);
std::vector<char> MakeMask(int num_vertices, std::span<const Vertex> set);
VertexSet AllVertices(const Graph& graph);
VertexSet SetDifference(const VertexSet& a, const VertexSet& b);
VertexSet SetUnion(const VertexSet& a, const VertexSet& b);
bool IsSubset(const VertexSet& a, const VertexSet& b);

// Throws DomainError if any element is not a vertex of graph.
void CheckVertices(const Graph& graph, std::span<const Vertex> set);

// Connected components of the subgraph induced on `set`, each sorted, listed
// by smallest vertex.
std::vector<VertexSet> InducedComponents(const Graph& graph,
                                         const VertexSet& set);
// An empty set counts as connected.
bool IsInducedConnected(const Graph& graph, const VertexSet& set);

// Edges with both endpoints in `set`, ascending.
std::vector<EdgeId> InducedEdges(const Graph& graph, const VertexSet& set);

// N^k(S): vertices at distance 1..k from S. S itself is excluded.
VertexSet Neighborhood(const Graph& graph, const VertexSet& set, int k);

// Vertices of F with a neighbor outside F.
VertexSet Boundary(const Graph& graph, const VertexSet& set);

// |boundary(F)| < epsilon * |F|. Throws DomainError on empty F.
bool IsFolner(const Graph& graph, const VertexSet& set,
              const Rational& epsilon);

// The complement of H induces exactly one connected component. Throws
// UnsupportedInstance on graphs without a grid shape and DomainError when H
// is empty or the whole vertex set.
bool IsHoleFree(const Graph& graph, const VertexSet& set);

// The 2-annulus N^2(H) induces a connected subgraph. Requires H connected,
// hole-free and proper (DomainError otherwise).
bool AnnulusConnected(const Graph& graph, const VertexSet& set);

}  // namespace toastflow

#endif  // TOASTFLOW_GRAPH_H_
