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


#ifndef TOASTFLOW_TOAST_H_
#define TOASTFLOW_TOAST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toastflow/graph.h"

namespace toastflow {

using TileId = int64_t;

struct Tile {
  TileId id = 0;
  std::optional<TileId> parent;
  VertexSet vertices;

  friend bool operator==(const Tile&, const Tile&) = default;
};

// A nested family of finite connected tiles, stored as a forest through the
// parent links. The constructor only enforces the forest structure; whether
// the family is a connected toast on some graph is answered by ValidateToast.
class Toast {
 public:
  Toast() = default;

  // Sorts tiles by id and normalizes vertex lists. Throws FormatError on
  // duplicate ids, empty tiles, dangling parents or parent cycles.
  explicit Toast(std::vector<Tile> tiles);

  const std::vector<Tile>& tiles() const { return tiles_; }
  int size() const { return static_cast<int>(tiles_.size()); }

  // Position of `id` in tiles(); throws DomainError for unknown ids.
  int IndexOf(TileId id) const;
  const Tile& tile(TileId id) const { return tiles_[IndexOf(id)]; }

  // Indices into tiles(), ascending by id.
  const std::vector<int>& children(int index) const { return children_[index]; }
  const std::vector<int>& roots() const { return roots_; }
  std::optional<int> parent(int index) const { return parent_[index]; }

  // True when `ancestor` is a proper ancestor of `index`.
  bool IsAncestor(int ancestor, int index) const;
  std::vector<int> Descendants(int index) const;

  friend bool operator==(const Toast& a, const Toast& b) {
    return a.tiles_ == b.tiles_;
  }

 private:
  std::vector<Tile> tiles_;
  std::vector<std::optional<int>> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> roots_;
};

struct ToastViolation {
  int property = 0;  // 1 coverage, 2 nesting/separation, 3 connectivity
  std::vector<TileId> tiles;
  std::vector<EdgeId> edges;
  std::string detail;
};

struct ToastReport {
  std::vector<ToastViolation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(int property) const;
  bool Has(int property, TileId tile) const;
};

// Throws FormatError when a tile names a vertex outside the graph.
void CheckToastVertices(const Graph& graph, const Toast& toast);

// Checks the three toast properties against the declared forest:
//  1. every edge is induced in some tile;
//  2. each child's closed neighbourhood lies in its parent, incomparable
//     tiles have disjoint closed neighbourhoods, and no two tiles coincide;
//  3. each tile is connected and its free region induces a connected graph.
ToastReport ValidateToast(const Graph& graph, const Toast& toast);

// Levels M_1, M_2, ...: M_1 are the leaves and a tile sits one level above
// its highest child. Each level lists tile ids ascending.
struct ToastLevels {
  std::vector<std::vector<TileId>> levels;
};
ToastLevels Stratify(const Toast& toast);

// Tile minus the union of its descendants.
VertexSet FreeRegion(const Toast& toast, TileId id);

// For every pair K, L: (K u N^k(K)) and L are disjoint, or one tile's closed
// k-neighbourhood is contained in the other.
bool IsKToast(const Graph& graph, const Toast& toast, int k);

// Property 3 for a 3-toast of hole-free tiles. Throws DomainError when the
// preconditions fail.
bool KToastImpliesConnected(const Graph& graph, const Toast& toast);

struct TorusToastParams {
  int width = 0;
  int height = 0;
  int base = 0;
  int factor = 1;
  int margin = 3;
  uint64_t seed = 0;
};

// Hierarchy of solid squares on torus(width, height). The top non-root
// level has one square of side C - margin per cell of side
// C = base * factor^(depth-1); each square holds factor x factor child
// squares separated from each other and from its rim by at least `margin`
// cells, with leftover cells handed out as seeded jitter. The root tile is
// the whole torus. Throws ParameterError when the dimensions do not fit.
Toast GenerateTorusToast(const TorusToastParams& params);

}  // namespace toastflow

#endif  // TOASTFLOW_TOAST_H_
