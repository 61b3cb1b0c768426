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


#ifndef TOASTFLOW_ORACLE_H_
#define TOASTFLOW_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "toastflow/flow.h"
#include "toastflow/parity.h"
#include "toastflow/toast.h"

namespace toastflow {

// Edmonds-Karp maximum flow on a small directed network. Ground truth for
// integral feasibility; deliberately independent of the rounding code.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  // Returns the arc index.
  int AddArc(int tail, int head, int64_t capacity);
  int64_t Solve(int source, int sink);
  int64_t Flow(int arc) const { return flow_[arc]; }

 private:
  struct Arc {
    int head;
    int64_t capacity;
  };
  // Arcs come in pairs (2i forward, 2i+1 reverse).
  std::vector<Arc> arcs_;
  std::vector<int64_t> flow_;
  std::vector<std::vector<int>> out_;
};

// Integral x with lower[e] <= x(e) <= upper[e] on the canonical orientation
// and divergence equal to demand, or nullopt. Lower bounds are shifted out
// and the rest is a single-source / single-sink maximum flow.
std::optional<std::vector<int64_t>> FeasibleWithBounds(
    const Graph& graph, const std::vector<int64_t>& demand,
    const std::vector<int64_t>& lower, const std::vector<int64_t>& upper);

// An integral f-flow with |psi(e)| <= c(e), or nullopt. Requires a capacity.
std::optional<Flow> FeasibleIntegralFlow(const FlowProblem& problem);

// The integral f-flow bounded by c whose value vector (canonical edge
// order, integer order on values) is lexicographically least. Requires a
// capacity.
std::optional<Flow> LexLeastIntegralFlow(const FlowProblem& problem);

// Every integral f-flow with all |values| <= bound, in lexicographic order.
// Refuses (RefusalError) graphs with more than kMaxEnumerationEdges edges.
inline constexpr int kMaxEnumerationEdges = 12;
std::vector<Flow> EnumerateIntegralFlows(const FlowProblem& problem,
                                         int64_t bound);

struct InstanceParams {
  TorusToastParams toast;
  int circuit_count = 0;
  std::vector<int64_t> denominators{3, 5, 7};
  uint64_t seed = 0;
};

// A rounding input with a known integral witness: phi = witness + a sum of
// rational circuits.
struct InstanceBundle {
  FlowProblem problem;
  Toast toast;
  Flow phi;
  Flow witness;
  uint64_t seed = 0;
};

// Demand with |f| <= 2 and total 0, witness routed along a breadth-first
// spanning tree, circuits on random rectangles with values p/q, q drawn from
// the denominators and 0 < |p| < q.
InstanceBundle RandomInstance(const InstanceParams& params);

// Both flows are f-flows, the witness is integral, and the toast is valid.
bool CheckBundle(const InstanceBundle& bundle);

// Simple cycle along the boundary of the width x height rectangle with
// lower-left corner (x, y) on a torus, counter-clockwise.
OrientedCycle RectangleCycle(const Graph& torus, int x, int y, int width,
                             int height);

}  // namespace toastflow

#endif  // TOASTFLOW_ORACLE_H_
