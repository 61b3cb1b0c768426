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


#ifndef TOASTFLOW_ROUNDING_H_
#define TOASTFLOW_ROUNDING_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toastflow/errors.h"
#include "toastflow/flow.h"
#include "toastflow/parity.h"
#include "toastflow/rational.h"
#include "toastflow/toast.h"

namespace toastflow {

// Thrown when an internal guarantee of the rounding procedure fails (no
// cycle through a target edge, an odd vertex in a union graph, a bound
// overshoot). Carries enough state to reproduce the failure.
class CertifiedFailure : public Error {
 public:
  CertifiedFailure(const std::string& what, TileId tile, EdgeId edge,
                   Flow state)
      : Error(what), tile_(tile), edge_(edge), state_(std::move(state)) {}

  TileId tile() const { return tile_; }
  EdgeId edge() const { return edge_; }
  const Flow& state() const { return state_; }

 private:
  TileId tile_;
  EdgeId edge_;
  Flow state_;
};

// One circuit added to the flow.
struct RoundingStep {
  int stage = 1;          // 1: to dyadic, 2: to integral
  int level = 0;          // level of the processed tile (1 = leaves)
  TileId tile = 0;
  bool root_pass = false;
  int64_t step = 0;       // stage 1: global counter n; stage 2: running index
  EdgeId target = -1;     // stage 1: the edge made dyadic
  int exponent = 0;       // stage 2: l, the constant is 2^-l
  int dyadic_child_edges = -1;  // stage 1: dyadic edges inside children after
  OrientedCycle cycle;
  Rational constant;      // added along the cycle's orientation
};

// Absolute stage-2 change an edge accumulated while one tile was processed.
struct TileContribution {
  EdgeId edge = 0;
  TileId tile = 0;
  Rational total;
};

struct RoundingTrace {
  std::vector<RoundingStep> steps;
  // Signed per-edge change made by each stage (empty if the stage did not
  // run).
  std::vector<Rational> stage1_change;
  std::vector<Rational> stage2_change;
  std::vector<TileContribution> stage2_contributions;
};

struct RoundingResult {
  Flow flow;
  RoundingTrace trace;
};

struct RoundingOptions {
  // Recheck every divergence after every circuit. Quadratic; for tests.
  bool check_each_step = false;
};

// Stage 1: a dyadic f-flow with the same divergence and |psi - phi| < 1 on
// every edge. Tiles are processed by ascending level and id; each parentless
// tile gets a final pass over its whole component. Throws DomainError on
// invalid inputs and CertifiedFailure if an internal guarantee breaks.
RoundingResult DyadicRound(const FlowProblem& problem, const Toast& toast,
                           const Flow& phi, const RoundingOptions& options = {});

// Stage 2: an integral f-flow with the same divergence and |psi - phi| < 2.
// Requires a dyadic phi.
RoundingResult IntegralRound(const FlowProblem& problem, const Toast& toast,
                             const Flow& phi,
                             const RoundingOptions& options = {});

// IntegralRound after DyadicRound: integral, same divergence, |psi - phi| < 3.
// With a capacity c that phi respects, |psi(e)| <= c(e) + 2 is also checked.
RoundingResult RoundFlow(const FlowProblem& problem, const Toast& toast,
                         const Flow& phi, const RoundingOptions& options = {});

// The dyadic j / 2^m with m minimal such that |j / 2^m - x| < 2^-n, minus x.
// x must be non-dyadic and n >= 1.
Rational MinimalDyadicCorrection(const Rational& x, int64_t n);

}  // namespace toastflow

#endif  // TOASTFLOW_ROUNDING_H_
