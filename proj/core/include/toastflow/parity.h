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


#ifndef TOASTFLOW_PARITY_H_
#define TOASTFLOW_PARITY_H_

#include <optional>
#include <vector>

#include "toastflow/graph.h"

namespace toastflow {

// Subset of a host graph's edges, stored as a membership mask so that
// lookups during cycle searches are O(1).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Graph& graph) : member_(graph.num_edges(), 0) {}
  EdgeSet(const Graph& graph, const std::vector<EdgeId>& edges);

  bool contains(EdgeId e) const { return member_[e] != 0; }
  void Insert(EdgeId e);
  void Erase(EdgeId e);
  // Symmetric difference with a single edge.
  void Toggle(EdgeId e);

  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  int host_edges() const { return static_cast<int>(member_.size()); }

  // Members in ascending order.
  std::vector<EdgeId> edges() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<char> member_;
  int count_ = 0;
};

// Degree of every vertex in the spanning subgraph formed by `edges`.
std::vector<int> Degrees(const Graph& graph, const EdgeSet& edges);

// Closed walk v_0 v_1 ... v_{m-1} (v_m = v_0 implied) with pairwise distinct
// edges. Traversal direction is the circuit's orientation.
struct OrientedCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  // Each step as (edge, +1 if traversed u->v, -1 if v->u).
  std::vector<std::pair<EdgeId, int>> Steps(const Graph& graph) const;

  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;
};

// Edges inside `region` such that exactly the vertices of `odd` have odd
// degree. Pairs the sorted odd vertices (p0,p1), (p2,p3), ... and takes the
// symmetric difference of lexicographic breadth-first paths inside the
// region. Throws InfeasibleInput when |odd| is odd or the region is
// disconnected, DomainError when odd is not a subset of region.
EdgeSet OddParitySubgraph(const Graph& graph, const VertexSet& region,
                          const VertexSet& odd);

// Splits an even-degree edge set into edge-disjoint simple cycles. Throws
// InfeasibleInput naming the first odd-degree vertex.
std::vector<OrientedCycle> CycleDecompose(const Graph& graph,
                                          const EdgeSet& edges);

// Shortest simple cycle through e using only `allowed` edges, found by
// breadth-first search from e.v to e.u avoiding e. The result traverses e
// in its canonical direction u -> v. Returns nullopt when e is a bridge of
// the allowed subgraph.
std::optional<OrientedCycle> FindCycleThrough(const Graph& graph, EdgeId e,
                                              const EdgeSet& allowed);

}  // namespace toastflow

#endif  // TOASTFLOW_PARITY_H_
