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


#include "toastflow/rounding.h"

#include <algorithm>
#include <string>

namespace toastflow {

Rational MinimalDyadicCorrection(const Rational& x, int64_t n) {
  if (n < 1) throw DomainError("step counter must be positive");
  if (x.IsDyadic()) throw DomainError("value is already dyadic");
  // With y = x * 2^n, a multiple of 2^-m lies within 2^-n of x iff floor(y)
  // is 0 or -1 modulo 2^(n-m). The largest such power of two gives the
  // smallest m.
  mpq_class y;
  mpq_mul_2exp(y.get_mpq_t(), x.value().get_mpq_t(), n);
  mpz_class floor_y;
  mpz_fdiv_q(floor_y.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  mpz_class next = floor_y + 1;
  auto trailing_zeros = [n](const mpz_class& z) -> int64_t {
    if (z == 0) return n;
    return std::min<int64_t>(n, mpz_scan1(z.get_mpz_t(), 0));
  };
  const int64_t s = std::max(trailing_zeros(floor_y), trailing_zeros(next));
  const int64_t m = n - s;
  mpq_class scaled;
  mpq_mul_2exp(scaled.get_mpq_t(), x.value().get_mpq_t(), m);
  const mpz_class j = Rational(scaled).RoundToNearest();
  mpq_class target(j);
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), m);
  return Rational(mpq_class(target - x.value()));
}

namespace {

void AddAlongCycle(const Graph& graph, const OrientedCycle& cycle,
                   const Rational& amount, Flow& flow,
                   std::vector<EdgeId>* touched = nullptr) {
  for (const auto& [e, sign] : cycle.Steps(graph)) {
    if (sign > 0) {
      flow.Add(e, amount);
    } else {
      flow.Add(e, -amount);
    }
    if (touched) touched->push_back(e);
  }
}

std::vector<Rational> ChangeOf(const Flow& before, const Flow& after) {
  std::vector<Rational> out(before.num_edges());
  for (EdgeId e = 0; e < before.num_edges(); ++e) out[e] = after[e] - before[e];
  return out;
}

// Input checks shared by both stages.
void CheckInputs(const FlowProblem& problem, const Toast& toast,
                 const Flow& phi) {
  problem.Validate();
  if (phi.num_edges() != problem.graph.num_edges()) {
    throw DomainError("flow does not live on the problem's graph");
  }
  const ToastReport report = ValidateToast(problem.graph, toast);
  if (!report.ok()) {
    throw DomainError("toast is invalid: property " +
                      std::to_string(report.violations.front().property) +
                      ": " + report.violations.front().detail);
  }
  if (!VerifyFlow(phi, problem).ok()) {
    throw DomainError("input is not an f-flow for the given demand");
  }
}

// Tiles in processing order: ascending level, then id. Leaves never need a
// pass of their own; parentless tiles are handled by the root pass.
struct Schedule {
  std::vector<std::pair<int, int>> inner;  // (level, tile index)
  std::vector<std::pair<int, int>> roots;
};

Schedule MakeSchedule(const Toast& toast) {
  Schedule s;
  const ToastLevels levels = Stratify(toast);
  for (size_t l = 0; l < levels.levels.size(); ++l) {
    for (TileId id : levels.levels[l]) {
      const int index = toast.IndexOf(id);
      const int level = static_cast<int>(l) + 1;
      if (!toast.parent(index)) {
        s.roots.emplace_back(level, index);
      } else if (!toast.children(index).empty()) {
        s.inner.emplace_back(level, index);
      }
    }
  }
  std::sort(s.roots.begin(), s.roots.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return s;
}

// Vertex masks of a tile's children and free region.
struct TileParts {
  std::vector<char> in_tile;
  std::vector<char> in_child;
  std::vector<char> in_free;
  VertexSet free;
  std::vector<VertexSet> children;  // ascending child id
};

TileParts Split(const Graph& graph, const Toast& toast, int index) {
  TileParts parts;
  const Tile& tile = toast.tiles()[index];
  parts.in_tile = MakeMask(graph.num_vertices(), tile.vertices);
  parts.in_child.assign(graph.num_vertices(), 0);
  for (int c : toast.children(index)) {
    parts.children.push_back(toast.tiles()[c].vertices);
    for (Vertex v : toast.tiles()[c].vertices) parts.in_child[v] = 1;
  }
  parts.free = FreeRegion(toast, tile.id);
  parts.in_free = MakeMask(graph.num_vertices(), parts.free);
  return parts;
}

class DivergenceGuard {
 public:
  DivergenceGuard(const FlowProblem& problem, bool enabled)
      : problem_(problem), enabled_(enabled) {}

  void Check(const Flow& flow, TileId tile, EdgeId edge) const {
    if (enabled_ && !VerifyFlow(flow, problem_).divergence_violations.empty()) {
      throw CertifiedFailure("divergence changed during rounding", tile, edge,
                             flow);
    }
  }

 private:
  const FlowProblem& problem_;
  bool enabled_;
};

// --- stage 1 -----------------------------------------------------------------

class DyadicRounder {
 public:
  DyadicRounder(const FlowProblem& problem, const Toast& toast, Flow flow,
                const RoundingOptions& options)
      : graph_(problem.graph),
        toast_(toast),
        flow_(std::move(flow)),
        guard_(problem, options.check_each_step) {}

  void Run() {
    const Schedule schedule = MakeSchedule(toast_);
    for (const auto& [level, index] : schedule.inner) ProcessTile(level, index);
    for (const auto& [level, index] : schedule.roots) RootPass(level, index);
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      if (!flow_[e].IsDyadic()) {
        throw CertifiedFailure("edge left non-dyadic after stage 1", -1, e,
                               flow_);
      }
    }
  }

  Flow& flow() { return flow_; }
  std::vector<RoundingStep>& steps() { return steps_; }

 private:
  // Makes every edge inside the children of tile `index` dyadic, using cycles
  // through non-dyadic child edges and arbitrary edges at the free region.
  void ProcessTile(int level, int index) {
    const TileParts parts = Split(graph_, toast_, index);
    std::vector<EdgeId> targets;
    for (const VertexSet& child : parts.children) {
      for (EdgeId e : InducedEdges(graph_, child)) targets.push_back(e);
    }
    std::vector<EdgeId> free_edges;
    for (Vertex x : parts.free) {
      for (const Incidence& inc : graph_.incident(x)) {
        if (parts.in_tile[inc.neighbor]) free_edges.push_back(inc.edge);
      }
    }
    int dyadic = CountDyadic(targets);
    while (true) {
      const EdgeId e = FirstNonDyadic(targets);
      if (e < 0) break;
      EdgeSet allowed(graph_, free_edges);
      for (EdgeId t : targets) {
        if (!flow_[t].IsDyadic()) allowed.Insert(t);
      }
      Circulate(level, index, /*root_pass=*/false, e, allowed);
      const int now = CountDyadic(targets);
      if (now <= dyadic) {
        throw CertifiedFailure("dyadic child edges did not increase",
                               toast_.tiles()[index].id, e, flow_);
      }
      dyadic = now;
      steps_.back().dyadic_child_edges = now;
    }
  }

  // Makes every remaining edge of a component dyadic. Only non-dyadic edges
  // may carry the cycle, so dyadic edges stay dyadic; a non-dyadic edge is
  // never a bridge of that subgraph since every cut carries an integer.
  void RootPass(int level, int index) {
    const Tile& root = toast_.tiles()[index];
    const std::vector<EdgeId> targets = InducedEdges(graph_, root.vertices);
    int dyadic = CountDyadic(targets);
    while (true) {
      const EdgeId e = FirstNonDyadic(targets);
      if (e < 0) break;
      EdgeSet allowed(graph_);
      for (EdgeId t : targets) {
        if (!flow_[t].IsDyadic()) allowed.Insert(t);
      }
      Circulate(level, index, /*root_pass=*/true, e, allowed);
      const int now = CountDyadic(targets);
      if (now <= dyadic) {
        throw CertifiedFailure("dyadic edges did not increase in root pass",
                               root.id, e, flow_);
      }
      dyadic = now;
      steps_.back().dyadic_child_edges = now;
    }
  }

  void Circulate(int level, int index, bool root_pass, EdgeId e,
                 const EdgeSet& allowed) {
    const TileId tile = toast_.tiles()[index].id;
    std::optional<OrientedCycle> cycle = FindCycleThrough(graph_, e, allowed);
    if (!cycle) {
      throw CertifiedFailure(
          "no allowed cycle through non-dyadic edge " +
              std::to_string(graph_.id(graph_.edge(e).u)) + "-" +
              std::to_string(graph_.id(graph_.edge(e).v)) + " in tile " +
              std::to_string(tile),
          tile, e, flow_);
    }
    ++counter_;
    // The cycle traverses e as u -> v, so the stored value is the value in
    // the cycle's direction.
    Rational delta = MinimalDyadicCorrection(flow_[e], counter_);
    AddAlongCycle(graph_, *cycle, delta, flow_);
    guard_.Check(flow_, tile, e);
    RoundingStep step;
    step.stage = 1;
    step.level = level;
    step.tile = tile;
    step.root_pass = root_pass;
    step.step = counter_;
    step.target = e;
    step.cycle = std::move(*cycle);
    step.constant = std::move(delta);
    steps_.push_back(std::move(step));
  }

  EdgeId FirstNonDyadic(const std::vector<EdgeId>& edges) const {
    for (EdgeId e : edges) {
      if (!flow_[e].IsDyadic()) return e;
    }
    return -1;
  }

  int CountDyadic(const std::vector<EdgeId>& edges) const {
    return static_cast<int>(std::count_if(
        edges.begin(), edges.end(),
        [&](EdgeId e) { return flow_[e].IsDyadic(); }));
  }

  const Graph& graph_;
  const Toast& toast_;
  Flow flow_;
  DivergenceGuard guard_;
  int64_t counter_ = 0;
  std::vector<RoundingStep> steps_;
};

// --- stage 2 -----------------------------------------------------------------

class IntegralRounder {
 public:
  IntegralRounder(const FlowProblem& problem, const Toast& toast, Flow flow,
                  const RoundingOptions& options)
      : graph_(problem.graph),
        toast_(toast),
        flow_(std::move(flow)),
        guard_(problem, options.check_each_step),
        exponent_(graph_.num_edges()),
        contributions_(graph_.num_edges()) {
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      exponent_[e] = flow_[e].DenominatorExponent();
    }
  }

  void Run() {
    const Schedule schedule = MakeSchedule(toast_);
    for (const auto& [level, index] : schedule.inner) ProcessTile(level, index);
    for (const auto& [level, index] : schedule.roots) RootPass(level, index);
    if (!flow_.IsIntegral()) {
      throw CertifiedFailure("flow not integral after stage 2", -1, -1, flow_);
    }
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      if (contributions_[e].size() > 2) {
        throw CertifiedFailure("edge changed in more than two tile passes", -1,
                               e, flow_);
      }
      for (const auto& [tile, total] : contributions_[e]) {
        if (total >= Rational(1)) {
          throw CertifiedFailure("edge changed by 1 or more in one tile pass",
                                 tile, e, flow_);
        }
      }
    }
  }

  Flow& flow() { return flow_; }
  std::vector<RoundingStep>& steps() { return steps_; }

  std::vector<TileContribution> Contributions() const {
    std::vector<TileContribution> out;
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      for (const auto& [tile, total] : contributions_[e]) {
        out.push_back({e, tile, total});
      }
    }
    return out;
  }

 private:
  // Makes every edge with an endpoint in a child of tile `index` integral,
  // one denominator 2^l at a time, fixing parities at the free region with
  // a parity subgraph.
  void ProcessTile(int level, int index) {
    const TileParts parts = Split(graph_, toast_, index);
    const TileId tile = toast_.tiles()[index].id;
    std::vector<EdgeId> scope;
    for (const VertexSet& child : parts.children) {
      for (Vertex v : child) {
        for (const Incidence& inc : graph_.incident(v)) {
          if (!parts.in_child[inc.neighbor] || inc.neighbor > v) {
            scope.push_back(inc.edge);
          }
        }
      }
    }
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

    int previous = -1;
    while (true) {
      const int l = MaxExponent(scope);
      if (l == 0) break;
      CheckDescent(previous, l, tile);
      previous = l;
      EdgeSet cycle_edges(graph_);
      std::vector<int> odd_count(graph_.num_vertices(), 0);
      for (EdgeId e : scope) {
        if (exponent_[e] != l) continue;
        cycle_edges.Insert(e);
        const Edge& ed = graph_.edge(e);
        if (parts.in_free[ed.u]) ++odd_count[ed.u];
        if (parts.in_free[ed.v]) ++odd_count[ed.v];
      }
      VertexSet odd;
      for (Vertex x : parts.free) {
        if (odd_count[x] % 2 != 0) odd.push_back(x);
      }
      EdgeSet parity;
      try {
        parity = OddParitySubgraph(graph_, parts.free, odd);
      } catch (const InfeasibleInput& err) {
        throw CertifiedFailure(std::string("parity subgraph failed: ") +
                                   err.what(),
                               tile, -1, flow_);
      }
      for (EdgeId e : parity.edges()) cycle_edges.Insert(e);
      AddCycles(level, tile, /*root_pass=*/false, l, cycle_edges);
    }
  }

  void RootPass(int level, int index) {
    const Tile& root = toast_.tiles()[index];
    const std::vector<EdgeId> scope = InducedEdges(graph_, root.vertices);
    int previous = -1;
    while (true) {
      const int l = MaxExponent(scope);
      if (l == 0) break;
      CheckDescent(previous, l, root.id);
      previous = l;
      EdgeSet cycle_edges(graph_);
      for (EdgeId e : scope) {
        if (exponent_[e] == l) cycle_edges.Insert(e);
      }
      AddCycles(level, root.id, /*root_pass=*/true, l, cycle_edges);
    }
  }

  void AddCycles(int level, TileId tile, bool root_pass, int l,
                 const EdgeSet& cycle_edges) {
    std::vector<OrientedCycle> cycles;
    try {
      cycles = CycleDecompose(graph_, cycle_edges);
    } catch (const InfeasibleInput& err) {
      throw CertifiedFailure(std::string("union graph is not even: ") +
                                 err.what(),
                             tile, -1, flow_);
    }
    const Rational unit = Rational::InversePowerOfTwo(l);
    for (OrientedCycle& cycle : cycles) {
      std::vector<EdgeId> touched;
      AddAlongCycle(graph_, cycle, unit, flow_, &touched);
      for (EdgeId e : touched) {
        exponent_[e] = flow_[e].DenominatorExponent();
        Credit(e, tile, unit);
      }
      guard_.Check(flow_, tile, -1);
      RoundingStep step;
      step.stage = 2;
      step.level = level;
      step.tile = tile;
      step.root_pass = root_pass;
      step.step = static_cast<int64_t>(steps_.size()) + 1;
      step.exponent = l;
      step.cycle = std::move(cycle);
      step.constant = unit;
      steps_.push_back(std::move(step));
    }
  }

  void Credit(EdgeId e, TileId tile, const Rational& amount) {
    for (auto& [t, total] : contributions_[e]) {
      if (t == tile) {
        total += amount;
        return;
      }
    }
    contributions_[e].emplace_back(tile, amount);
  }

  int MaxExponent(const std::vector<EdgeId>& edges) const {
    int best = 0;
    for (EdgeId e : edges) best = std::max(best, exponent_[e]);
    return best;
  }

  void CheckDescent(int previous, int l, TileId tile) const {
    if (previous >= 0 && l >= previous) {
      throw CertifiedFailure("largest denominator did not decrease", tile, -1,
                             flow_);
    }
  }

  const Graph& graph_;
  const Toast& toast_;
  Flow flow_;
  DivergenceGuard guard_;
  std::vector<int> exponent_;
  std::vector<std::vector<std::pair<TileId, Rational>>> contributions_;
  std::vector<RoundingStep> steps_;
};

}  // namespace

RoundingResult DyadicRound(const FlowProblem& problem, const Toast& toast,
                           const Flow& phi, const RoundingOptions& options) {
  CheckInputs(problem, toast, phi);
  DyadicRounder rounder(problem, toast, phi, options);
  rounder.Run();
  RoundingResult result;
  result.trace.stage1_change = ChangeOf(phi, rounder.flow());
  for (const Rational& d : result.trace.stage1_change) {
    if (d.Abs() >= Rational(1)) {
      throw CertifiedFailure("stage 1 moved an edge by 1 or more", -1, -1,
                             rounder.flow());
    }
  }
  result.flow = std::move(rounder.flow());
  result.trace.steps = std::move(rounder.steps());
  return result;
}

RoundingResult IntegralRound(const FlowProblem& problem, const Toast& toast,
                             const Flow& phi, const RoundingOptions& options) {
  CheckInputs(problem, toast, phi);
  if (!phi.IsDyadic()) throw DomainError("stage 2 needs a dyadic flow");
  IntegralRounder rounder(problem, toast, phi, options);
  rounder.Run();
  RoundingResult result;
  result.trace.stage2_change = ChangeOf(phi, rounder.flow());
  for (const Rational& d : result.trace.stage2_change) {
    if (d.Abs() >= Rational(2)) {
      throw CertifiedFailure("stage 2 moved an edge by 2 or more", -1, -1,
                             rounder.flow());
    }
  }
  result.trace.stage2_contributions = rounder.Contributions();
  result.flow = std::move(rounder.flow());
  result.trace.steps = std::move(rounder.steps());
  return result;
}

RoundingResult RoundFlow(const FlowProblem& problem, const Toast& toast,
                         const Flow& phi, const RoundingOptions& options) {
  RoundingResult dyadic = DyadicRound(problem, toast, phi, options);
  RoundingResult integral =
      IntegralRound(problem, toast, dyadic.flow, options);
  RoundingResult result;
  result.flow = std::move(integral.flow);
  result.trace.steps = std::move(dyadic.trace.steps);
  result.trace.steps.insert(result.trace.steps.end(),
                            std::make_move_iterator(integral.trace.steps.begin()),
                            std::make_move_iterator(integral.trace.steps.end()));
  result.trace.stage1_change = std::move(dyadic.trace.stage1_change);
  result.trace.stage2_change = std::move(integral.trace.stage2_change);
  result.trace.stage2_contributions =
      std::move(integral.trace.stage2_contributions);

  if (SupDistance(result.flow, phi) >= Rational(3)) {
    throw CertifiedFailure("rounded flow is 3 or more away from the input",
                           -1, -1, result.flow);
  }
  if (problem.capacity && VerifyFlow(phi, problem).capacity_violations.empty()) {
    for (EdgeId e = 0; e < result.flow.num_edges(); ++e) {
      if (result.flow[e].Abs() > Rational((*problem.capacity)[e] + 2)) {
        throw CertifiedFailure("rounded flow exceeds capacity + 2", -1, e,
                               result.flow);
      }
    }
  }
  return result;
}

}  // namespace toastflow
