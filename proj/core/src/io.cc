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


#include "toastflow/io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

#include <nlohmann/json.hpp>

#include "toastflow/errors.h"

namespace toastflow {

namespace {

using Json = nlohmann::ordered_json;

Json ParseJson(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(source + ": byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void Fail(const std::string& source, const std::string& what) {
  throw FormatError(source + ": " + what);
}

const Json& Member(const Json& j, const char* key, const std::string& source) {
  if (!j.is_object()) Fail(source, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(source, std::string("missing \"") + key + "\"");
  return *it;
}

int64_t Integer(const Json& j, const std::string& source,
                const std::string& where) {
  if (!j.is_number_integer()) Fail(source, where + " must be an integer");
  return j.get<int64_t>();
}

Vertex LookupVertex(const Graph& graph, const Json& j,
                    const std::string& source) {
  const int64_t id = Integer(j, source, "vertex");
  auto v = graph.VertexOf(id);
  if (!v) Fail(source, "unknown vertex " + std::to_string(id));
  return *v;
}

Vertex LookupVertexKey(const Graph& graph, std::string_view text,
                       const std::string& source) {
  int64_t id = 0;
  try {
    size_t used = 0;
    id = std::stoll(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    Fail(source, "bad vertex id \"" + std::string(text) + "\"");
  }
  auto v = graph.VertexOf(id);
  if (!v) Fail(source, "unknown vertex " + std::string(text));
  return *v;
}

std::string EdgeKey(const Graph& graph, EdgeId e) {
  return std::to_string(graph.id(graph.edge(e).u)) + "-" +
         std::to_string(graph.id(graph.edge(e).v));
}

EdgeId LookupEdge(const Graph& graph, const std::string& key,
                  const std::string& source) {
  // The separator is the first '-' after the first character, so negative
  // ids on either side still split correctly.
  const size_t dash = key.find('-', 1);
  if (dash == std::string::npos) Fail(source, "bad edge key \"" + key + "\"");
  const Vertex u = LookupVertexKey(graph, std::string_view(key).substr(0, dash), source);
  const Vertex v = LookupVertexKey(graph, std::string_view(key).substr(dash + 1), source);
  if (u >= v) Fail(source, "edge key \"" + key + "\" is not u < v");
  auto e = graph.FindEdge(u, v);
  if (!e) Fail(source, "\"" + key + "\" is not an edge");
  return *e;
}

Json VertexList(const Graph& graph, std::span<const Vertex> set) {
  Json out = Json::array();
  for (Vertex v : set) out.push_back(graph.id(v));
  return out;
}

VertexSet ReadVertexList(const Graph& graph, const Json& j,
                         const std::string& source) {
  if (!j.is_array()) Fail(source, "vertex list must be an array");
  VertexSet out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(LookupVertex(graph, x, source));
  const size_t before = out.size();
  Normalize(out);
  if (out.size() != before) Fail(source, "repeated vertex in a list");
  return out;
}

std::pair<int, int> Dimensions(const Json& j, const std::string& source,
                               const char* what) {
  if (!j.is_array() || j.size() != 2) {
    Fail(source, std::string("\"") + what + "\" must be [w,h]");
  }
  return {static_cast<int>(Integer(j[0], source, what)),
          static_cast<int>(Integer(j[1], source, what))};
}

Rational ReadRational(const Json& j, const std::string& source) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (!j.is_string()) Fail(source, "rational values must be \"p/q\" strings");
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const FormatError& e) {
    Fail(source, e.what());
  }
}

}  // namespace

Graph ParseGraph(std::string_view text, const std::string& source) {
  const Json j = ParseJson(text, source);
  if (!j.is_object()) Fail(source, "expected an object");
  try {
    if (j.contains("torus")) {
      auto [w, h] = Dimensions(j["torus"], source, "torus");
      return Graph::Torus(w, h);
    }
    if (j.contains("grid")) {
      auto [w, h] = Dimensions(j["grid"], source, "grid");
      return Graph::Grid(w, h);
    }
  } catch (const DomainError& e) {
    Fail(source, e.what());
  }
  const Json& vertices = Member(j, "vertices", source);
  if (!vertices.is_array()) Fail(source, "\"vertices\" must be an array");
  std::vector<int64_t> ids;
  for (const Json& v : vertices) {
    ids.push_back(Integer(v, source, "vertex"));
  }
  std::vector<std::pair<int64_t, int64_t>> edges;
  const Json& list = Member(j, "edges", source);
  if (!list.is_array()) Fail(source, "\"edges\" must be an array");
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 2) Fail(source, "edges must be [u,v]");
    edges.emplace_back(Integer(e[0], source, "edge endpoint"),
                       Integer(e[1], source, "edge endpoint"));
  }
  try {
    return Graph::FromEdges(std::move(ids), edges);
  } catch (const FormatError& e) {
    Fail(source, e.what());
  }
}

std::string SerializeGraph(const Graph& graph) {
  Json j;
  if (graph.grid()) {
    j[graph.grid()->wraps ? "torus" : "grid"] = {graph.grid()->width,
                                                 graph.grid()->height};
    return Dump(j);
  }
  j["vertices"] = Json(std::vector<int64_t>(graph.ids().begin(), graph.ids().end()));
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({graph.id(e.u), graph.id(e.v)});
  }
  j["edges"] = std::move(edges);
  return Dump(j);
}

Flow ParseFlow(const Graph& graph, std::string_view text,
               const std::string& source) {
  const Json j = ParseJson(text, source);
  const Json& values = Member(j, "flow", source);
  if (!values.is_object()) Fail(source, "\"flow\" must be an object");
  Flow flow(graph);
  for (const auto& [key, value] : values.items()) {
    flow.Set(LookupEdge(graph, key, source), ReadRational(value, source));
  }
  return flow;
}

std::string SerializeFlow(const Graph& graph, const Flow& flow) {
  Json values = Json::object();
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    values[EdgeKey(graph, e)] = flow[e].ToString();
  }
  Json j;
  j["flow"] = std::move(values);
  return Dump(j);
}

std::vector<int64_t> ParseDemand(const Graph& graph, std::string_view text,
                                 const std::string& source) {
  const Json j = ParseJson(text, source);
  const Json& values = Member(j, "demand", source);
  if (!values.is_object()) Fail(source, "\"demand\" must be an object");
  std::vector<int64_t> demand(graph.num_vertices(), 0);
  for (const auto& [key, value] : values.items()) {
    demand[LookupVertexKey(graph, key, source)] = Integer(value, source, "demand");
  }
  return demand;
}

std::string SerializeDemand(const Graph& graph,
                            const std::vector<int64_t>& demand) {
  Json values = Json::object();
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    values[std::to_string(graph.id(v))] = demand[v];
  }
  Json j;
  j["demand"] = std::move(values);
  return Dump(j);
}

std::vector<int64_t> ParseCapacity(const Graph& graph, std::string_view text,
                                   const std::string& source) {
  const Json j = ParseJson(text, source);
  const Json& values = Member(j, "capacity", source);
  if (!values.is_object()) Fail(source, "\"capacity\" must be an object");
  std::optional<int64_t> fallback;
  if (j.contains("default")) fallback = Integer(j["default"], source, "default");
  std::vector<std::optional<int64_t>> read(graph.num_edges());
  for (const auto& [key, value] : values.items()) {
    read[LookupEdge(graph, key, source)] = Integer(value, source, "capacity");
  }
  std::vector<int64_t> capacity(graph.num_edges());
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (read[e]) {
      capacity[e] = *read[e];
    } else if (fallback) {
      capacity[e] = *fallback;
    } else {
      Fail(source, "no capacity for edge " + EdgeKey(graph, e));
    }
    if (capacity[e] < 0) Fail(source, "negative capacity on " + EdgeKey(graph, e));
  }
  return capacity;
}

std::string SerializeCapacity(const Graph& graph,
                              const std::vector<int64_t>& capacity) {
  Json values = Json::object();
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    values[EdgeKey(graph, e)] = capacity[e];
  }
  Json j;
  j["capacity"] = std::move(values);
  return Dump(j);
}

Toast ParseToast(const Graph& graph, std::string_view text,
                 const std::string& source) {
  const Json j = ParseJson(text, source);
  const Json& list = Member(j, "tiles", source);
  if (!list.is_array()) Fail(source, "\"tiles\" must be an array");
  std::vector<Tile> tiles;
  for (const Json& t : list) {
    Tile tile;
    tile.id = Integer(Member(t, "id", source), source, "tile id");
    const Json& parent = Member(t, "parent", source);
    if (!parent.is_null()) tile.parent = Integer(parent, source, "parent");
    tile.vertices = ReadVertexList(graph, Member(t, "vertices", source), source);
    tiles.push_back(std::move(tile));
  }
  try {
    return Toast(std::move(tiles));
  } catch (const FormatError& e) {
    Fail(source, e.what());
  }
}

std::string SerializeToast(const Graph& graph, const Toast& toast) {
  Json list = Json::array();
  for (const Tile& tile : toast.tiles()) {
    Json t;
    t["id"] = tile.id;
    t["parent"] = tile.parent ? Json(*tile.parent) : Json(nullptr);
    t["vertices"] = VertexList(graph, tile.vertices);
    list.push_back(std::move(t));
  }
  Json j;
  j["tiles"] = std::move(list);
  return Dump(j);
}

VertexSet ParseVertexSet(const Graph& graph, std::string_view text,
                         const std::string& source) {
  const Json j = ParseJson(text, source);
  return ReadVertexList(graph, Member(j, "vertices", source), source);
}

std::string SerializeVertexSet(const Graph& graph, const VertexSet& set) {
  Json j;
  j["vertices"] = VertexList(graph, set);
  return Dump(j);
}

PiecesFile ParsePieces(std::string_view text, const std::string& source) {
  const Json j = ParseJson(text, source);
  PiecesFile out;
  std::tie(out.width, out.height) =
      Dimensions(Member(j, "torus", source), source, "torus");
  Graph torus;
  try {
    torus = Graph::Torus(out.width, out.height);
  } catch (const DomainError& e) {
    Fail(source, e.what());
  }
  const Json& list = Member(j, "pieces", source);
  if (!list.is_array()) Fail(source, "\"pieces\" must be an array");
  for (const Json& p : list) {
    Piece piece;
    auto [a, b] = Dimensions(Member(p, "gamma", source), source, "gamma");
    piece.gamma = {a, b};
    piece.vertices = ReadVertexList(torus, Member(p, "vertices", source), source);
    out.pieces.pieces.push_back(std::move(piece));
  }
  return out;
}

std::string SerializePieces(const TorusAction& action,
                            const Equidecomposition& pieces) {
  Json list = Json::array();
  for (const Piece& piece : pieces.pieces) {
    Json p;
    p["gamma"] = {piece.gamma.dx, piece.gamma.dy};
    p["vertices"] = VertexList(action.graph(), piece.vertices);
    list.push_back(std::move(p));
  }
  Json j;
  j["torus"] = {action.width(), action.height()};
  j["pieces"] = std::move(list);
  return Dump(j);
}

std::vector<RoundingStep> ParseTrace(const Graph& graph, std::string_view text,
                                     const std::string& source) {
  const Json j = ParseJson(text, source);
  if (!j.is_array()) Fail(source, "trace must be an array of steps");
  std::vector<RoundingStep> steps;
  steps.reserve(j.size());
  for (const Json& s : j) {
    RoundingStep step;
    step.stage = static_cast<int>(Integer(Member(s, "stage", source), source, "stage"));
    step.level = static_cast<int>(Integer(Member(s, "level", source), source, "level"));
    step.tile = Integer(Member(s, "tile", source), source, "tile");
    const Json& root = Member(s, "root_pass", source);
    if (!root.is_boolean()) Fail(source, "\"root_pass\" must be a boolean");
    step.root_pass = root.get<bool>();
    step.step = Integer(Member(s, "step", source), source, "step");
    const Json& target = Member(s, "target", source);
    if (!target.is_null()) {
      if (!target.is_string()) Fail(source, "\"target\" must be an edge key");
      step.target = LookupEdge(graph, target.get<std::string>(), source);
    }
    step.exponent =
        static_cast<int>(Integer(Member(s, "exponent", source), source, "exponent"));
    step.dyadic_child_edges = static_cast<int>(Integer(
        Member(s, "dyadic_child_edges", source), source, "dyadic_child_edges"));
    const Json& cycle = Member(s, "cycle", source);
    if (!cycle.is_array()) Fail(source, "\"cycle\" must be an array");
    for (const Json& v : cycle) {
      step.cycle.vertices.push_back(LookupVertex(graph, v, source));
    }
    step.constant = ReadRational(Member(s, "constant", source), source);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string SerializeTrace(const Graph& graph,
                           const std::vector<RoundingStep>& steps) {
  Json list = Json::array();
  for (const RoundingStep& step : steps) {
    Json s;
    s["stage"] = step.stage;
    s["level"] = step.level;
    s["tile"] = step.tile;
    s["root_pass"] = step.root_pass;
    s["step"] = step.step;
    s["target"] = step.target >= 0 ? Json(EdgeKey(graph, step.target))
                                   : Json(nullptr);
    s["exponent"] = step.exponent;
    s["dyadic_child_edges"] = step.dyadic_child_edges;
    s["cycle"] = VertexList(graph, step.cycle.vertices);
    s["constant"] = step.constant.ToString();
    list.push_back(std::move(s));
  }
  return Dump(list);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FormatError(path + ": read failed");
  return buffer.str();
}

void WriteFileAtomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError(path + ": cannot open for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw FormatError(path + ": write failed");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw FormatError(path + ": rename failed");
  }
}

}  // namespace toastflow
