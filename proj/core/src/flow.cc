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


#include "toastflow/flow.h"

#include <string>

#include "toastflow/errors.h"

namespace toastflow {

Rational Flow::Value(const Graph& graph, Vertex from, Vertex to) const {
  auto e = graph.FindEdge(from, to);
  if (!e) throw DomainError("vertices are not adjacent");
  return from < to ? values_[*e] : -values_[*e];
}

void Flow::AddDirected(const Graph& graph, Vertex from, Vertex to,
                       const Rational& amount) {
  auto e = graph.FindEdge(from, to);
  if (!e) throw DomainError("vertices are not adjacent");
  if (from < to) {
    values_[*e] += amount;
  } else {
    values_[*e] -= amount;
  }
}

bool Flow::IsIntegral() const {
  for (const Rational& v : values_) {
    if (!v.IsIntegral()) return false;
  }
  return true;
}

bool Flow::IsDyadic() const {
  for (const Rational& v : values_) {
    if (!v.IsDyadic()) return false;
  }
  return true;
}

Rational Divergence(const Graph& graph, const Flow& flow, Vertex x) {
  if (!graph.IsVertex(x)) {
    throw DomainError("unknown vertex index " + std::to_string(x));
  }
  if (flow.num_edges() != graph.num_edges()) {
    throw DomainError("flow does not match the graph's edge set");
  }
  Rational sum;
  for (const Incidence& inc : graph.incident(x)) {
    if (x < inc.neighbor) {
      sum += flow[inc.edge];
    } else {
      sum -= flow[inc.edge];
    }
  }
  return sum;
}

std::vector<Rational> Divergences(const Graph& graph, const Flow& flow) {
  if (flow.num_edges() != graph.num_edges()) {
    throw DomainError("flow does not match the graph's edge set");
  }
  std::vector<Rational> out(graph.num_vertices());
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    out[graph.edge(e).u] += flow[e];
    out[graph.edge(e).v] -= flow[e];
  }
  return out;
}

Rational SupDistance(const Flow& a, const Flow& b) {
  if (a.num_edges() != b.num_edges()) {
    throw DomainError("flows live on different edge sets");
  }
  Rational best;
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    Rational d = (a[e] - b[e]).Abs();
    if (d > best) best = std::move(d);
  }
  return best;
}

Rational SupNorm(const Flow& flow) {
  Rational best;
  for (const Rational& v : flow.values()) {
    if (v.Abs() > best) best = v.Abs();
  }
  return best;
}

void FlowProblem::Validate() const {
  if (static_cast<int>(demand.size()) != graph.num_vertices()) {
    throw DomainError("demand size does not match the vertex count");
  }
  if (capacity) {
    if (static_cast<int>(capacity->size()) != graph.num_edges()) {
      throw DomainError("capacity size does not match the edge count");
    }
    for (int64_t c : *capacity) {
      if (c < 0) throw DomainError("negative capacity");
    }
  }
  for (const VertexSet& component :
       InducedComponents(graph, AllVertices(graph))) {
    int64_t total = 0;
    for (Vertex v : component) total += demand[v];
    if (total != 0) {
      throw DomainError("component containing vertex " +
                        std::to_string(graph.id(component.front())) +
                        " has non-zero total demand");
    }
  }
}

FlowReport VerifyFlow(const Flow& flow, const FlowProblem& problem) {
  if (flow.num_edges() != problem.graph.num_edges() ||
      static_cast<int>(problem.demand.size()) !=
          problem.graph.num_vertices()) {
    throw DomainError("flow and problem do not share a graph");
  }
  FlowReport report;
  const std::vector<Rational> div = Divergences(problem.graph, flow);
  for (Vertex v = 0; v < problem.graph.num_vertices(); ++v) {
    if (div[v] != Rational(problem.demand[v])) {
      report.divergence_violations.push_back(v);
    }
  }
  if (problem.capacity) {
    for (EdgeId e = 0; e < flow.num_edges(); ++e) {
      if (flow[e].Abs() > Rational((*problem.capacity)[e])) {
        report.capacity_violations.push_back(e);
      }
    }
  }
  return report;
}

std::vector<int64_t> IndicatorDemand(const Graph& graph, const VertexSet& a,
                                     const VertexSet& b) {
  CheckVertices(graph, a);
  CheckVertices(graph, b);
  std::vector<int64_t> demand(graph.num_vertices(), 0);
  for (Vertex v : a) demand[v] += 1;
  for (Vertex v : b) demand[v] -= 1;
  return demand;
}

}  // namespace toastflow
