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


#ifndef TOASTFLOW_FLOW_H_
#define TOASTFLOW_FLOW_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toastflow/graph.h"
#include "toastflow/rational.h"

namespace toastflow {

// Edge function stored on canonical orientations only. The value on a
// reversed edge is the negation of the stored value, so antisymmetry holds
// by construction.
class Flow {
 public:
  Flow() = default;
  explicit Flow(const Graph& graph) : values_(graph.num_edges()) {}
  explicit Flow(std::vector<Rational> values) : values_(std::move(values)) {}

  int num_edges() const { return static_cast<int>(values_.size()); }
  std::span<const Rational> values() const { return values_; }

  // Value on the canonical orientation of e.
  const Rational& operator[](EdgeId e) const { return values_[e]; }
  void Set(EdgeId e, Rational value) { values_[e] = std::move(value); }
  void Add(EdgeId e, const Rational& delta) { values_[e] += delta; }

  // phi(from, to); throws DomainError if the two are not adjacent.
  Rational Value(const Graph& graph, Vertex from, Vertex to) const;
  // phi(from, to) += amount, keeping antisymmetry.
  void AddDirected(const Graph& graph, Vertex from, Vertex to,
                   const Rational& amount);

  bool IsIntegral() const;
  bool IsDyadic() const;

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  std::vector<Rational> values_;
};

// Net outflow at x: sum over neighbors y of phi(x, y).
Rational Divergence(const Graph& graph, const Flow& flow, Vertex x);
std::vector<Rational> Divergences(const Graph& graph, const Flow& flow);

// max_e |a(e) - b(e)|.
Rational SupDistance(const Flow& a, const Flow& b);
Rational SupNorm(const Flow& flow);

// A demand f on vertices and an optional integral capacity c on edges.
struct FlowProblem {
  Graph graph;
  std::vector<int64_t> demand;
  std::optional<std::vector<int64_t>> capacity;

  // Throws DomainError when sizes disagree with the graph, a capacity is
  // negative or some connected component has non-zero total demand.
  void Validate() const;
};

struct FlowReport {
  std::vector<Vertex> divergence_violations;
  std::vector<EdgeId> capacity_violations;

  bool ok() const {
    return divergence_violations.empty() && capacity_violations.empty();
  }
};

// Checks divergence == demand everywhere and, if a capacity is present,
// |value(e)| <= c(e). Throws DomainError when the flow does not live on the
// problem's graph.
FlowReport VerifyFlow(const Flow& flow, const FlowProblem& problem);

// Characteristic-function demand chi_A - chi_B.
std::vector<int64_t> IndicatorDemand(const Graph& graph, const VertexSet& a,
                                     const VertexSet& b);

}  // namespace toastflow

#endif  // TOASTFLOW_FLOW_H_
