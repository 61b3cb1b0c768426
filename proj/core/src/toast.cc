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


#include "toastflow/toast.h"

#include <algorithm>
#include <string>

#include "toastflow/errors.h"
#include "toastflow/random.h"

namespace toastflow {

Toast::Toast(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
  std::sort(tiles_.begin(), tiles_.end(),
            [](const Tile& a, const Tile& b) { return a.id < b.id; });
  const int n = size();
  for (int i = 0; i + 1 < n; ++i) {
    if (tiles_[i].id == tiles_[i + 1].id) {
      throw FormatError("duplicate tile id " + std::to_string(tiles_[i].id));
    }
  }
  parent_.assign(n, std::nullopt);
  children_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    Tile& t = tiles_[i];
    Normalize(t.vertices);
    if (t.vertices.empty()) {
      throw FormatError("tile " + std::to_string(t.id) + " is empty");
    }
    if (!t.parent) {
      roots_.push_back(i);
      continue;
    }
    auto it = std::lower_bound(
        tiles_.begin(), tiles_.end(), *t.parent,
        [](const Tile& tile, TileId key) { return tile.id < key; });
    if (it == tiles_.end() || it->id != *t.parent) {
      throw FormatError("tile " + std::to_string(t.id) +
                        " names missing parent " + std::to_string(*t.parent));
    }
    parent_[i] = static_cast<int>(it - tiles_.begin());
    children_[*parent_[i]].push_back(i);
  }
  // Every tile must reach a root; otherwise the parent links contain a cycle.
  for (int i = 0; i < n; ++i) {
    int steps = 0;
    for (std::optional<int> p = parent_[i]; p; p = parent_[*p]) {
      if (++steps > n) {
        throw FormatError("parent links of tile " +
                          std::to_string(tiles_[i].id) + " form a cycle");
      }
    }
  }
}

int Toast::IndexOf(TileId id) const {
  auto it = std::lower_bound(
      tiles_.begin(), tiles_.end(), id,
      [](const Tile& tile, TileId key) { return tile.id < key; });
  if (it == tiles_.end() || it->id != id) {
    throw DomainError("unknown tile id " + std::to_string(id));
  }
  return static_cast<int>(it - tiles_.begin());
}

bool Toast::IsAncestor(int ancestor, int index) const {
  for (std::optional<int> p = parent_[index]; p; p = parent_[*p]) {
    if (*p == ancestor) return true;
  }
  return false;
}

std::vector<int> Toast::Descendants(int index) const {
  std::vector<int> out;
  std::vector<int> stack = children_[index];
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    out.push_back(t);
    stack.insert(stack.end(), children_[t].begin(), children_[t].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ToastReport::Has(int property) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const ToastViolation& v) {
                       return v.property == property;
                     });
}

bool ToastReport::Has(int property, TileId tile) const {
  return std::any_of(
      violations.begin(), violations.end(), [&](const ToastViolation& v) {
        return v.property == property &&
               std::find(v.tiles.begin(), v.tiles.end(), tile) != v.tiles.end();
      });
}

void CheckToastVertices(const Graph& graph, const Toast& toast) {
  for (const Tile& t : toast.tiles()) {
    for (Vertex v : t.vertices) {
      if (!graph.IsVertex(v)) {
        throw FormatError("tile " + std::to_string(t.id) +
                          " names unknown vertex " + std::to_string(v));
      }
    }
  }
}

namespace {

VertexSet ClosedBall(const Graph& graph, const VertexSet& set, int k) {
  return SetUnion(set, Neighborhood(graph, set, k));
}

bool Disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

VertexSet FreeRegionAt(const Toast& toast, int index) {
  VertexSet covered;
  for (int d : toast.Descendants(index)) {
    covered.insert(covered.end(), toast.tiles()[d].vertices.begin(),
                   toast.tiles()[d].vertices.end());
  }
  Normalize(covered);
  return SetDifference(toast.tiles()[index].vertices, covered);
}

}  // namespace

ToastReport ValidateToast(const Graph& graph, const Toast& toast) {
  CheckToastVertices(graph, toast);
  ToastReport report;
  const auto& tiles = toast.tiles();
  const int n = toast.size();

  // Property 1: coverage of every edge.
  std::vector<char> covered(graph.num_edges(), 0);
  for (const Tile& t : tiles) {
    for (EdgeId e : InducedEdges(graph, t.vertices)) covered[e] = 1;
  }
  std::vector<EdgeId> uncovered;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (!covered[e]) uncovered.push_back(e);
  }
  if (!uncovered.empty()) {
    report.violations.push_back(
        {1, {}, uncovered,
         std::to_string(uncovered.size()) + " edge(s) lie in no tile"});
  }

  // Property 2: nesting along the forest, separation elsewhere.
  std::vector<VertexSet> balls(n);
  for (int i = 0; i < n; ++i) balls[i] = ClosedBall(graph, tiles[i].vertices, 1);
  for (int i = 0; i < n; ++i) {
    if (auto p = toast.parent(i);
        p && !IsSubset(balls[i], tiles[*p].vertices)) {
      report.violations.push_back(
          {2, {tiles[i].id, tiles[*p].id}, {},
           "closed neighbourhood of the child is not inside its parent"});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (tiles[i].vertices == tiles[j].vertices) {
        report.violations.push_back(
            {2, {tiles[i].id, tiles[j].id}, {}, "tiles are identical"});
        continue;
      }
      if (toast.IsAncestor(i, j) || toast.IsAncestor(j, i)) continue;
      if (!Disjoint(balls[i], tiles[j].vertices)) {
        report.violations.push_back(
            {2, {tiles[i].id, tiles[j].id}, {},
             "incomparable tiles touch or overlap"});
      }
    }
  }

  // Property 3: connected tiles with connected free regions.
  for (int i = 0; i < n; ++i) {
    if (!IsInducedConnected(graph, tiles[i].vertices)) {
      report.violations.push_back(
          {3, {tiles[i].id}, {}, "tile is not connected"});
      continue;
    }
    const VertexSet free = FreeRegionAt(toast, i);
    if (free.empty()) {
      report.violations.push_back(
          {3, {tiles[i].id}, {}, "free region is empty"});
    } else if (!IsInducedConnected(graph, free)) {
      report.violations.push_back(
          {3, {tiles[i].id}, {}, "free region is disconnected"});
    }
  }
  return report;
}

ToastLevels Stratify(const Toast& toast) {
  const int n = toast.size();
  std::vector<int> level(n, 0);
  // Children before parents: process tiles by decreasing depth.
  std::vector<int> depth(n, 0);
  for (int i = 0; i < n; ++i) {
    for (auto p = toast.parent(i); p; p = toast.parent(*p)) ++depth[i];
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return depth[a] > depth[b]; });
  int height = 0;
  for (int i : order) {
    int l = 1;
    for (int c : toast.children(i)) l = std::max(l, level[c] + 1);
    level[i] = l;
    height = std::max(height, l);
  }
  ToastLevels out;
  out.levels.resize(height);
  for (int i = 0; i < n; ++i) {
    out.levels[level[i] - 1].push_back(toast.tiles()[i].id);
  }
  return out;
}

VertexSet FreeRegion(const Toast& toast, TileId id) {
  return FreeRegionAt(toast, toast.IndexOf(id));
}

bool IsKToast(const Graph& graph, const Toast& toast, int k) {
  if (k < 1) throw DomainError("k must be positive");
  CheckToastVertices(graph, toast);
  const auto& tiles = toast.tiles();
  const int n = toast.size();
  std::vector<VertexSet> balls(n);
  for (int i = 0; i < n; ++i) balls[i] = ClosedBall(graph, tiles[i].vertices, k);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Disjoint(balls[i], tiles[j].vertices)) continue;
      if (IsSubset(balls[i], tiles[j].vertices)) continue;
      if (IsSubset(balls[j], tiles[i].vertices)) continue;
      return false;
    }
  }
  return true;
}

bool KToastImpliesConnected(const Graph& graph, const Toast& toast) {
  if (!IsKToast(graph, toast, 3)) {
    throw DomainError("toast is not a 3-toast");
  }
  for (const Tile& t : toast.tiles()) {
    if (static_cast<int>(t.vertices.size()) == graph.num_vertices()) continue;
    if (!IsInducedConnected(graph, t.vertices) ||
        !IsHoleFree(graph, t.vertices)) {
      throw DomainError("tile " + std::to_string(t.id) +
                        " is not a connected hole-free set");
    }
  }
  return !ValidateToast(graph, toast).Has(3);
}

// --- generator ---------------------------------------------------------------

namespace {

struct Layout {
  // Square side per level; sides[0] is the leaf level.
  std::vector<int> sides;
  int top_cell = 0;
};

Layout PlanLayout(const TorusToastParams& p) {
  if (p.width != p.height) {
    throw ParameterError("toast generator needs a square torus");
  }
  if (p.margin < 3) throw ParameterError("margin must be at least 3");
  if (p.factor < 1) throw ParameterError("factor must be positive");
  if (p.base < p.margin + 3) {
    throw ParameterError("base must be at least margin + 3");
  }
  int depth = 0;
  if (p.factor == 1) {
    if (p.width != p.base) {
      throw ParameterError("with factor 1 the torus side must equal base");
    }
    depth = 1;
  } else {
    int64_t cell = p.base;
    while (cell < p.width) {
      cell *= p.factor;
      ++depth;
    }
    if (cell != p.width || depth < 1) {
      throw ParameterError("torus side " + std::to_string(p.width) +
                           " is not base * factor^d with d >= 1");
    }
  }
  Layout layout;
  layout.top_cell = p.base;
  if (p.factor > 1) {
    for (int j = 1; j < depth; ++j) layout.top_cell *= p.factor;
  }
  std::vector<int> top_down{layout.top_cell - p.margin};
  for (int j = 1; j < depth; ++j) {
    const int parent = top_down.back();
    const int child = (parent - (p.factor + 1) * p.margin) / p.factor;
    if (child < 1) {
      throw ParameterError(
          "margin too large for this depth: level " + std::to_string(depth - j) +
          " squares would be empty; use a larger base or smaller margin");
    }
    top_down.push_back(child);
  }
  layout.sides.assign(top_down.rbegin(), top_down.rend());
  return layout;
}

// Gap sizes along one axis: factor + 1 gaps of at least `margin`, the slack
// spread at random.
std::vector<int> JitteredGaps(int factor, int margin, int slack, Rng& rng) {
  std::vector<int> gaps(factor + 1, margin);
  for (int s = 0; s < slack; ++s) ++gaps[rng.Below(gaps.size())];
  return gaps;
}

class ToastBuilder {
 public:
  ToastBuilder(const TorusToastParams& params, const Layout& layout)
      : params_(params),
        layout_(layout),
        graph_(Graph::Torus(params.width, params.height)),
        rng_(params.seed) {}

  Toast Build() {
    tiles_.push_back({0, std::nullopt, AllVertices(graph_)});
    const int shift_x = static_cast<int>(rng_.Below(params_.width));
    const int shift_y = static_cast<int>(rng_.Below(params_.height));
    const int top_level = static_cast<int>(layout_.sides.size()) - 1;
    const int per_axis = params_.width / layout_.top_cell;
    // Breadth-first so ids grow from the root downwards.
    std::vector<Pending> frontier;
    for (int cy = 0; cy < per_axis; ++cy) {
      for (int cx = 0; cx < per_axis; ++cx) {
        frontier.push_back({top_level, shift_x + cx * layout_.top_cell,
                            shift_y + cy * layout_.top_cell, 0});
      }
    }
    while (!frontier.empty()) {
      std::vector<Pending> next;
      for (const Pending& sq : frontier) {
        const TileId id = static_cast<TileId>(tiles_.size());
        const int side = layout_.sides[sq.level];
        tiles_.push_back({id, sq.parent, Square(sq.x, sq.y, side)});
        if (sq.level == 0) continue;
        const int child = layout_.sides[sq.level - 1];
        const int slack =
            side - (params_.factor + 1) * params_.margin - params_.factor * child;
        const std::vector<int> gx =
            JitteredGaps(params_.factor, params_.margin, slack, rng_);
        const std::vector<int> gy =
            JitteredGaps(params_.factor, params_.margin, slack, rng_);
        int y = sq.y;
        for (int j = 0; j < params_.factor; ++j) {
          y += gy[j];
          int x = sq.x;
          for (int i = 0; i < params_.factor; ++i) {
            x += gx[i];
            next.push_back({sq.level - 1, x, y, id});
            x += child;
          }
          y += child;
        }
      }
      frontier = std::move(next);
    }
    return Toast(std::move(tiles_));
  }

 private:
  struct Pending {
    int level;
    int x;
    int y;
    TileId parent;
  };

  VertexSet Square(int x0, int y0, int side) const {
    VertexSet out;
    out.reserve(static_cast<size_t>(side) * side);
    for (int y = y0; y < y0 + side; ++y) {
      for (int x = x0; x < x0 + side; ++x) out.push_back(graph_.GridVertex(x, y));
    }
    return Normalize(out);
  }

  const TorusToastParams& params_;
  const Layout& layout_;
  Graph graph_;
  Rng rng_;
  std::vector<Tile> tiles_;
};

}  // namespace

Toast GenerateTorusToast(const TorusToastParams& params) {
  const Layout layout = PlanLayout(params);
  return ToastBuilder(params, layout).Build();
}

}  // namespace toastflow
