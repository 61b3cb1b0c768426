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


#ifndef TOASTFLOW_EQUIDECOMP_H_
#define TOASTFLOW_EQUIDECOMP_H_

#include <cstdint>
#include <vector>

#include "toastflow/errors.h"
#include "toastflow/flow.h"
#include "toastflow/graph.h"
#include "toastflow/rational.h"

namespace toastflow {

// Translation vector on Z_w x Z_h.
struct Translation {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const Translation&, const Translation&) = default;
  friend auto operator<=>(const Translation&, const Translation&) = default;
};

// Z_w x Z_h acting on itself by translation, generators (+-1, 0), (0, +-1).
// The Schreier graph is Graph::Torus(w, h).
class TorusAction {
 public:
  // Requires w, h >= 3 (ParameterError).
  TorusAction(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  const Graph& graph() const { return graph_; }

  // Representative with components in (-w/2, w/2] x (-h/2, h/2].
  Translation Reduce(Translation g) const;
  Vertex Apply(Translation g, Vertex v) const;
  // The reduced g with Apply(g, from) == to.
  Translation Between(Vertex from, Vertex to) const;
  // Shortest word length in the generators.
  int WordLength(Translation g) const;

 private:
  int width_;
  int height_;
  Graph graph_;
};

struct Tiling {
  std::vector<VertexSet> tiles;
  Rational epsilon;
};

// Throws DomainError unless the tiles are non-empty and partition the
// vertices of the action's graph.
void CheckTiling(const TorusAction& action, const Tiling& tiling);

// s x s squares with the smallest s >= 3 dividing both sides such that a
// square is a proper subset and epsilon-Folner. ParameterError if none.
Tiling FolnerTiling(const TorusAction& action, const Rational& epsilon);

struct UniformReport {
  std::vector<int> violating_tiles;  // indices into the tiling
  bool ok() const { return violating_tiles.empty(); }
};

// |A n T| >= epsilon |T| for every tile T.
UniformReport CheckUniform(const TorusAction& action, const VertexSet& a,
                           const Tiling& tiling, const Rational& epsilon);

struct Piece {
  VertexSet vertices;
  Translation gamma;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Pieces of A, each moved by its translation onto a piece of B.
struct Equidecomposition {
  std::vector<Piece> pieces;

  friend bool operator==(const Equidecomposition&,
                         const Equidecomposition&) = default;
};

struct BijectionFlow {
  Flow flow;
  // pieces x max word length; the flow's sup norm never exceeds it.
  int64_t bound = 0;
};

// One unit from every x in a piece to gamma x, x-moves first then y-moves,
// each along the shorter way around. Divergence is chi_A - chi_B where A is
// the union of the pieces and B the union of the images. Throws DomainError
// when sources or images overlap.
BijectionFlow FlowFromBijection(const TorusAction& action,
                                const Equidecomposition& pieces);

// Raised when a tile holds too few points for the flow leaving it.
class DeficientTile : public InfeasibleInput {
 public:
  DeficientTile(const std::string& what, int tile)
      : InfeasibleInput(what), tile_(tile) {}
  int tile() const { return tile_; }

 private:
  int tile_;
};

// Turns an integral (chi_A - chi_B)-flow into an equidecomposition of A onto
// B. Aggregated inter-tile flow psi(T, S) > 0 moves that many of the
// smallest original A-points of T over to S; afterwards A- and B-points are
// matched in increasing order inside each tile. Pieces are grouped by
// translation and sorted by it. Requires |A n T| and |B n T| to be at least
// sum_S |psi(T, S)| for every tile (DeficientTile otherwise); DomainError on
// a bad tiling or a flow of the wrong divergence.
Equidecomposition Equidecompose(const TorusAction& action, const VertexSet& a,
                                const VertexSet& b, const Tiling& tiling,
                                const Flow& psi);

struct EquidecompositionReport {
  std::vector<Vertex> duplicated_sources;
  std::vector<Vertex> missing_sources;  // in A, in no piece
  std::vector<Vertex> extra_sources;    // in a piece, not in A
  std::vector<Vertex> duplicated_images;
  std::vector<Vertex> foreign_images;   // image not in B
  std::vector<Vertex> uncovered_targets;

  bool ok() const {
    return duplicated_sources.empty() && missing_sources.empty() &&
           extra_sources.empty() && duplicated_images.empty() &&
           foreign_images.empty() && uncovered_targets.empty();
  }
};

EquidecompositionReport VerifyEquidecomposition(const TorusAction& action,
                                                const VertexSet& a,
                                                const VertexSet& b,
                                                const Equidecomposition& pieces);

}  // namespace toastflow

#endif  // TOASTFLOW_EQUIDECOMP_H_
