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


#include "toastflow/oracle.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "toastflow/errors.h"
#include "toastflow/random.h"

namespace toastflow {

MaxFlow::MaxFlow(int num_nodes) : out_(num_nodes) {}

int MaxFlow::AddArc(int tail, int head, int64_t capacity) {
  const int index = static_cast<int>(arcs_.size());
  arcs_.push_back({head, capacity});
  arcs_.push_back({tail, 0});
  flow_.push_back(0);
  flow_.push_back(0);
  out_[tail].push_back(index);
  out_[head].push_back(index + 1);
  return index;
}

int64_t MaxFlow::Solve(int source, int sink) {
  int64_t total = 0;
  const int n = static_cast<int>(out_.size());
  while (true) {
    std::vector<int> via(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : out_[x]) {
        const int y = arcs_[a].head;
        if (!seen[y] && arcs_[a].capacity - flow_[a] > 0) {
          seen[y] = 1;
          via[y] = a;
          queue.push_back(y);
        }
      }
    }
    if (!seen[sink]) return total;
    int64_t push = std::numeric_limits<int64_t>::max();
    for (int y = sink; y != source; y = arcs_[via[y] ^ 1].head) {
      push = std::min(push, arcs_[via[y]].capacity - flow_[via[y]]);
    }
    for (int y = sink; y != source; y = arcs_[via[y] ^ 1].head) {
      flow_[via[y]] += push;
      flow_[via[y] ^ 1] -= push;
    }
    total += push;
  }
}

std::optional<std::vector<int64_t>> FeasibleWithBounds(
    const Graph& graph, const std::vector<int64_t>& demand,
    const std::vector<int64_t>& lower, const std::vector<int64_t>& upper) {
  const int n = graph.num_vertices();
  const int m = graph.num_edges();
  // x = lower + y with 0 <= y <= upper - lower; y flows u -> v.
  std::vector<int64_t> residual = demand;
  for (EdgeId e = 0; e < m; ++e) {
    if (lower[e] > upper[e]) return std::nullopt;
    residual[graph.edge(e).u] -= lower[e];
    residual[graph.edge(e).v] += lower[e];
  }
  const int source = n;
  const int sink = n + 1;
  MaxFlow network(n + 2);
  std::vector<int> arc(m);
  for (EdgeId e = 0; e < m; ++e) {
    arc[e] = network.AddArc(graph.edge(e).u, graph.edge(e).v,
                            upper[e] - lower[e]);
  }
  int64_t required = 0;
  int64_t absorbed = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (residual[v] > 0) {
      network.AddArc(source, v, residual[v]);
      required += residual[v];
    } else if (residual[v] < 0) {
      network.AddArc(v, sink, -residual[v]);
      absorbed -= residual[v];
    }
  }
  if (required != absorbed) return std::nullopt;
  if (network.Solve(source, sink) != required) return std::nullopt;
  std::vector<int64_t> x(m);
  for (EdgeId e = 0; e < m; ++e) x[e] = lower[e] + network.Flow(arc[e]);
  return x;
}

namespace {

const std::vector<int64_t>& RequireCapacity(const FlowProblem& problem) {
  if (!problem.capacity) {
    throw DomainError("this oracle needs an edge capacity");
  }
  if (static_cast<int>(problem.demand.size()) !=
          problem.graph.num_vertices() ||
      static_cast<int>(problem.capacity->size()) != problem.graph.num_edges()) {
    throw DomainError("demand or capacity does not match the graph");
  }
  return *problem.capacity;
}

Flow ToFlow(const std::vector<int64_t>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (int64_t v : values) out.emplace_back(v);
  return Flow(std::move(out));
}

}  // namespace

std::optional<Flow> FeasibleIntegralFlow(const FlowProblem& problem) {
  const std::vector<int64_t>& capacity = RequireCapacity(problem);
  std::vector<int64_t> lower(capacity.size());
  for (size_t e = 0; e < capacity.size(); ++e) lower[e] = -capacity[e];
  auto x = FeasibleWithBounds(problem.graph, problem.demand, lower, capacity);
  if (!x) return std::nullopt;
  return ToFlow(*x);
}

std::optional<Flow> LexLeastIntegralFlow(const FlowProblem& problem) {
  const std::vector<int64_t>& capacity = RequireCapacity(problem);
  std::vector<int64_t> upper = capacity;
  std::vector<int64_t> lower(capacity.size());
  for (size_t e = 0; e < capacity.size(); ++e) lower[e] = -capacity[e];
  if (!FeasibleWithBounds(problem.graph, problem.demand, lower, upper)) {
    return std::nullopt;
  }
  for (size_t e = 0; e < capacity.size(); ++e) {
    bool fixed = false;
    for (int64_t value = -capacity[e]; value <= capacity[e]; ++value) {
      lower[e] = upper[e] = value;
      if (FeasibleWithBounds(problem.graph, problem.demand, lower, upper)) {
        fixed = true;
        break;
      }
    }
    // Unreachable: the previous prefix was feasible.
    if (!fixed) return std::nullopt;
  }
  return ToFlow(lower);
}

std::vector<Flow> EnumerateIntegralFlows(const FlowProblem& problem,
                                         int64_t bound) {
  const Graph& g = problem.graph;
  if (g.num_edges() > kMaxEnumerationEdges) {
    throw RefusalError("enumeration refused: " +
                       std::to_string(g.num_edges()) + " edges exceeds " +
                       std::to_string(kMaxEnumerationEdges));
  }
  if (static_cast<int>(problem.demand.size()) != g.num_vertices()) {
    throw DomainError("demand does not match the graph");
  }
  const int m = g.num_edges();
  const int n = g.num_vertices();
  // remaining[i][v]: edges at v with index >= i.
  std::vector<std::vector<int>> remaining(m + 1, std::vector<int>(n, 0));
  for (int i = m - 1; i >= 0; --i) {
    remaining[i] = remaining[i + 1];
    ++remaining[i][g.edge(i).u];
    ++remaining[i][g.edge(i).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (std::abs(problem.demand[v]) > remaining[0][v] * bound) return {};
  }

  std::vector<Flow> out;
  std::vector<int64_t> values(m, 0);
  std::vector<int64_t> divergence(n, 0);
  auto search = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(ToFlow(values));
      return;
    }
    const Vertex u = g.edge(i).u;
    const Vertex v = g.edge(i).v;
    for (int64_t x = -bound; x <= bound; ++x) {
      divergence[u] += x;
      divergence[v] -= x;
      const bool u_ok = std::abs(problem.demand[u] - divergence[u]) <=
                        remaining[i + 1][u] * bound;
      const bool v_ok = std::abs(problem.demand[v] - divergence[v]) <=
                        remaining[i + 1][v] * bound;
      if (u_ok && v_ok) {
        values[i] = x;
        self(self, i + 1);
      }
      divergence[u] -= x;
      divergence[v] += x;
    }
  };
  search(search, 0);
  return out;
}

OrientedCycle RectangleCycle(const Graph& torus, int x, int y, int width,
                             int height) {
  OrientedCycle cycle;
  for (int i = 0; i < width; ++i) cycle.vertices.push_back(torus.GridVertex(x + i, y));
  for (int j = 0; j < height; ++j) {
    cycle.vertices.push_back(torus.GridVertex(x + width, y + j));
  }
  for (int i = width; i > 0; --i) {
    cycle.vertices.push_back(torus.GridVertex(x + i, y + height));
  }
  for (int j = height; j > 0; --j) {
    cycle.vertices.push_back(torus.GridVertex(x, y + j));
  }
  return cycle;
}

namespace {

std::vector<int64_t> RandomDemand(int n, Rng& rng) {
  std::vector<int64_t> f(n);
  int64_t total = 0;
  for (auto& x : f) {
    x = rng.Between(-2, 2);
    total += x;
  }
  while (total != 0) {
    const auto v = static_cast<size_t>(rng.Below(n));
    if (total > 0 && f[v] > -2) {
      --f[v];
      --total;
    } else if (total < 0 && f[v] < 2) {
      ++f[v];
      ++total;
    }
  }
  return f;
}

Flow TreeRouting(const Graph& g, const std::vector<int64_t>& demand) {
  const int n = g.num_vertices();
  std::vector<EdgeId> up(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const Incidence& inc : g.incident(v)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          parent[inc.neighbor] = v;
          up[inc.neighbor] = inc.edge;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  std::vector<int64_t> subtree = demand;
  Flow flow(g);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (parent[v] < 0) continue;
    flow.AddDirected(g, v, parent[v], Rational(subtree[v]));
    subtree[parent[v]] += subtree[v];
  }
  return flow;
}

}  // namespace

InstanceBundle RandomInstance(const InstanceParams& params) {
  if (params.circuit_count < 0) {
    throw ParameterError("circuit count must be non-negative");
  }
  if (params.circuit_count > 0 && params.denominators.empty()) {
    throw ParameterError("circuits need at least one denominator");
  }
  for (int64_t q : params.denominators) {
    if (q < 2) throw ParameterError("denominators must be at least 2");
  }
  InstanceBundle bundle;
  bundle.seed = params.seed;
  bundle.toast = GenerateTorusToast(params.toast);
  const int w = params.toast.width;
  const int h = params.toast.height;
  bundle.problem.graph = Graph::Torus(w, h);
  const Graph& g = bundle.problem.graph;

  Rng rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
  bundle.problem.demand = RandomDemand(g.num_vertices(), rng);
  bundle.witness = TreeRouting(g, bundle.problem.demand);
  bundle.phi = bundle.witness;
  for (int c = 0; c < params.circuit_count; ++c) {
    const int x = static_cast<int>(rng.Below(w));
    const int y = static_cast<int>(rng.Below(h));
    const int a = static_cast<int>(rng.Between(1, w / 2));
    const int b = static_cast<int>(rng.Between(1, h / 2));
    const int64_t q =
        params.denominators[rng.Below(params.denominators.size())];
    int64_t p = rng.Between(1, q - 1);
    if (rng.Chance(1, 2)) p = -p;
    const Rational value(p, q);
    for (const auto& [e, sign] : RectangleCycle(g, x, y, a, b).Steps(g)) {
      bundle.phi.Add(e, sign > 0 ? value : -value);
    }
  }
  return bundle;
}

bool CheckBundle(const InstanceBundle& bundle) {
  const FlowProblem& p = bundle.problem;
  try {
    p.Validate();
  } catch (const DomainError&) {
    return false;
  }
  return bundle.witness.IsIntegral() && VerifyFlow(bundle.witness, p).ok() &&
         VerifyFlow(bundle.phi, p).ok() &&
         ValidateToast(p.graph, bundle.toast).ok();
}

}  // namespace toastflow
