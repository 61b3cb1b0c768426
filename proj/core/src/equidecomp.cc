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


#include "toastflow/equidecomp.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

namespace toastflow {

namespace {

int Mod(int a, int n) { return ((a % n) + n) % n; }

int ReduceComponent(int a, int n) {
  a = Mod(a, n);
  return a > n / 2 ? a - n : a;
}

}  // namespace

TorusAction::TorusAction(int width, int height)
    : width_(width), height_(height) {
  if (width < 3 || height < 3) {
    throw ParameterError("torus action needs both sides >= 3");
  }
  graph_ = Graph::Torus(width, height);
}

Translation TorusAction::Reduce(Translation g) const {
  return {ReduceComponent(g.dx, width_), ReduceComponent(g.dy, height_)};
}

Vertex TorusAction::Apply(Translation g, Vertex v) const {
  const auto [x, y] = graph_.GridCoordinates(v);
  return graph_.GridVertex(x + g.dx, y + g.dy);
}

Translation TorusAction::Between(Vertex from, Vertex to) const {
  const auto [x0, y0] = graph_.GridCoordinates(from);
  const auto [x1, y1] = graph_.GridCoordinates(to);
  return Reduce({x1 - x0, y1 - y0});
}

int TorusAction::WordLength(Translation g) const {
  const Translation r = Reduce(g);
  return std::abs(r.dx) + std::abs(r.dy);
}

void CheckTiling(const TorusAction& action, const Tiling& tiling) {
  const Graph& g = action.graph();
  std::vector<int> hits(g.num_vertices(), 0);
  for (size_t t = 0; t < tiling.tiles.size(); ++t) {
    if (tiling.tiles[t].empty()) {
      throw DomainError("tile " + std::to_string(t) + " is empty");
    }
    CheckVertices(g, tiling.tiles[t]);
    for (Vertex v : tiling.tiles[t]) ++hits[v];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (hits[v] != 1) {
      throw DomainError("tiling covers vertex " + std::to_string(v) + " " +
                        std::to_string(hits[v]) + " times");
    }
  }
}

Tiling FolnerTiling(const TorusAction& action, const Rational& epsilon) {
  const int w = action.width();
  const int h = action.height();
  for (int s = 3; s <= std::min(w, h); ++s) {
    if (w % s != 0 || h % s != 0) continue;
    if (s == w && s == h) break;
    VertexSet square;
    for (int y = 0; y < s; ++y) {
      for (int x = 0; x < s; ++x) square.push_back(action.graph().GridVertex(x, y));
    }
    Normalize(square);
    if (!IsFolner(action.graph(), square, epsilon)) continue;

    Tiling tiling;
    tiling.epsilon = epsilon;
    for (int ty = 0; ty < h / s; ++ty) {
      for (int tx = 0; tx < w / s; ++tx) {
        VertexSet tile;
        for (int y = 0; y < s; ++y) {
          for (int x = 0; x < s; ++x) {
            tile.push_back(action.graph().GridVertex(tx * s + x, ty * s + y));
          }
        }
        tiling.tiles.push_back(Normalize(tile));
      }
    }
    return tiling;
  }
  throw ParameterError(
      "no square side s >= 3 dividing " + std::to_string(w) + " and " +
      std::to_string(h) + " gives " + epsilon.ToString() +
      "-Folner tiles; try sides with more divisors or a larger epsilon");
}

UniformReport CheckUniform(const TorusAction& action, const VertexSet& a,
                           const Tiling& tiling, const Rational& epsilon) {
  CheckVertices(action.graph(), a);
  const std::vector<char> in_a = MakeMask(action.graph().num_vertices(), a);
  UniformReport report;
  for (size_t t = 0; t < tiling.tiles.size(); ++t) {
    int64_t count = 0;
    for (Vertex v : tiling.tiles[t]) count += in_a[v];
    const auto size = static_cast<int64_t>(tiling.tiles[t].size());
    if (Rational(count) < epsilon * Rational(size)) {
      report.violating_tiles.push_back(static_cast<int>(t));
    }
  }
  return report;
}

BijectionFlow FlowFromBijection(const TorusAction& action,
                                const Equidecomposition& pieces) {
  const Graph& g = action.graph();
  std::vector<char> source(g.num_vertices(), 0);
  std::vector<char> image(g.num_vertices(), 0);
  std::vector<int64_t> units(g.num_edges(), 0);
  int max_length = 0;
  for (const Piece& piece : pieces.pieces) {
    CheckVertices(g, piece.vertices);
    const Translation gamma = action.Reduce(piece.gamma);
    max_length = std::max(max_length, action.WordLength(gamma));
    const int sx = gamma.dx > 0 ? 1 : -1;
    const int sy = gamma.dy > 0 ? 1 : -1;
    for (Vertex v : piece.vertices) {
      const Vertex target = action.Apply(gamma, v);
      if (source[v]) {
        throw DomainError("vertex " + std::to_string(v) +
                          " is in two pieces");
      }
      if (image[target]) {
        throw DomainError("vertex " + std::to_string(target) +
                          " is the image of two points");
      }
      source[v] = image[target] = 1;
      auto [x, y] = g.GridCoordinates(v);
      auto step = [&](int nx, int ny) {
        const Vertex from = g.GridVertex(x, y);
        const Vertex to = g.GridVertex(nx, ny);
        const EdgeId e = *g.FindEdge(from, to);
        units[e] += from < to ? 1 : -1;
        x = nx;
        y = ny;
      };
      for (int i = 0; i < std::abs(gamma.dx); ++i) step(x + sx, y);
      for (int i = 0; i < std::abs(gamma.dy); ++i) step(x, y + sy);
    }
  }
  BijectionFlow out{Flow(g), 0};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (units[e] != 0) out.flow.Set(e, Rational(units[e]));
  }
  out.bound = static_cast<int64_t>(pieces.pieces.size()) * max_length;
  return out;
}

Equidecomposition Equidecompose(const TorusAction& action, const VertexSet& a,
                                const VertexSet& b, const Tiling& tiling,
                                const Flow& psi) {
  const Graph& g = action.graph();
  CheckVertices(g, a);
  CheckVertices(g, b);
  CheckTiling(action, tiling);
  if (psi.num_edges() != g.num_edges()) {
    throw DomainError("flow does not live on the torus");
  }
  if (!psi.IsIntegral()) throw DomainError("flow is not integral");
  FlowProblem problem{g, IndicatorDemand(g, a, b), std::nullopt};
  if (!VerifyFlow(psi, problem).ok()) {
    throw DomainError("flow divergence is not chi_A - chi_B");
  }

  const int num_tiles = static_cast<int>(tiling.tiles.size());
  std::vector<int> tile_of(g.num_vertices());
  for (int t = 0; t < num_tiles; ++t) {
    for (Vertex v : tiling.tiles[t]) tile_of[v] = t;
  }
  // transfer[{T, S}] = psi(T, S), aggregated over edges from T to S.
  std::map<std::pair<int, int>, int64_t> transfer;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int64_t value = psi[e].numerator().get_si();
    if (value == 0) continue;
    const int t = tile_of[g.edge(e).u];
    const int s = tile_of[g.edge(e).v];
    if (t == s) continue;
    transfer[{t, s}] += value;
    transfer[{s, t}] -= value;
  }

  std::vector<VertexSet> a_in(num_tiles);
  std::vector<VertexSet> b_in(num_tiles);
  for (Vertex v : a) a_in[tile_of[v]].push_back(v);
  for (Vertex v : b) b_in[tile_of[v]].push_back(v);
  std::vector<int64_t> boundary(num_tiles, 0);
  for (const auto& [key, value] : transfer) boundary[key.first] += std::abs(value);
  for (int t = 0; t < num_tiles; ++t) {
    const auto na = static_cast<int64_t>(a_in[t].size());
    const auto nb = static_cast<int64_t>(b_in[t].size());
    if (na < boundary[t] || nb < boundary[t]) {
      throw DeficientTile("tile " + std::to_string(t) + " holds " +
                              std::to_string(na) + " A-points and " +
                              std::to_string(nb) +
                              " B-points but its boundary flow is " +
                              std::to_string(boundary[t]),
                          t);
    }
  }

  // assigned[S]: A-points to be matched inside S.
  std::vector<VertexSet> assigned(num_tiles);
  std::vector<size_t> next(num_tiles, 0);
  for (const auto& [key, value] : transfer) {
    if (value <= 0) continue;
    const auto [t, s] = key;
    for (int64_t i = 0; i < value; ++i) assigned[s].push_back(a_in[t][next[t]++]);
  }
  for (int t = 0; t < num_tiles; ++t) {
    assigned[t].insert(assigned[t].end(), a_in[t].begin() + next[t],
                       a_in[t].end());
    std::sort(assigned[t].begin(), assigned[t].end());
  }

  std::map<Translation, VertexSet> grouped;
  for (int t = 0; t < num_tiles; ++t) {
    // Balanced by the divergence condition.
    if (assigned[t].size() != b_in[t].size()) {
      throw DomainError("tile " + std::to_string(t) +
                        " is unbalanced after transfers");
    }
    for (size_t i = 0; i < assigned[t].size(); ++i) {
      grouped[action.Between(assigned[t][i], b_in[t][i])].push_back(
          assigned[t][i]);
    }
  }
  Equidecomposition out;
  for (auto& [gamma, vertices] : grouped) {
    out.pieces.push_back({Normalize(vertices), gamma});
  }
  return out;
}

EquidecompositionReport VerifyEquidecomposition(const TorusAction& action,
                                                const VertexSet& a,
                                                const VertexSet& b,
                                                const Equidecomposition& pieces) {
  const Graph& g = action.graph();
  CheckVertices(g, a);
  CheckVertices(g, b);
  const int n = g.num_vertices();
  const std::vector<char> in_a = MakeMask(n, a);
  const std::vector<char> in_b = MakeMask(n, b);
  std::vector<int> source_hits(n, 0);
  std::vector<int> image_hits(n, 0);
  EquidecompositionReport report;
  for (const Piece& piece : pieces.pieces) {
    for (Vertex v : piece.vertices) {
      if (!g.IsVertex(v)) {
        report.extra_sources.push_back(v);
        continue;
      }
      ++source_hits[v];
      ++image_hits[action.Apply(piece.gamma, v)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (source_hits[v] > 1) report.duplicated_sources.push_back(v);
    if (source_hits[v] == 0 && in_a[v]) report.missing_sources.push_back(v);
    if (source_hits[v] > 0 && !in_a[v]) report.extra_sources.push_back(v);
    if (image_hits[v] > 1) report.duplicated_images.push_back(v);
    if (image_hits[v] > 0 && !in_b[v]) report.foreign_images.push_back(v);
    if (image_hits[v] == 0 && in_b[v]) report.uncovered_targets.push_back(v);
  }
  std::sort(report.extra_sources.begin(), report.extra_sources.end());
  return report;
}

}  // namespace toastflow
