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


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toastflow/equidecomp.h"
#include "toastflow/errors.h"
#include "toastflow/flow.h"
#include "toastflow/io.h"
#include "toastflow/oracle.h"
#include "toastflow/rounding.h"
#include "toastflow/toast.h"

namespace toastflow::cli {

namespace {

constexpr char kUsage[] =
    "usage: toastflow <command> [flags]\n"
    "commands:\n"
    "  toast-gen     generate a toast on a torus\n"
    "  toast-check   validate a toast against a graph\n"
    "  round         round a flow to an integral flow\n"
    "  check-flow    verify divergence and capacity of a flow\n"
    "  oracle        integral feasibility, lex-least flow, enumeration\n"
    "  gen-instance  write a random rounding instance\n"
    "  equidecomp    extract pieces moving set A onto set B\n"
    "  verify-pieces check pieces against sets A and B\n"
    "  render        draw pieces or a toast as svg or dot\n"
    "run `toastflow <command> --help` for flags\n";

// Output sink: a file written atomically, or `out` when no path is given.
void Emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    WriteFileAtomic(path, contents);
  }
}

Graph LoadGraph(const std::string& path) {
  return ParseGraph(ReadFile(path), path);
}

Rational ParseRationalFlag(const std::string& text, const char* flag) {
  try {
    return Rational::Parse(text);
  } catch (const FormatError& e) {
    throw ParameterError(std::string(flag) + ": " + e.what());
  }
}

std::string JoinIds(const std::vector<int64_t>& ids) {
  std::string s;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s;
}

// --- toast-gen -------------------------------------------------------------

struct ToastGenFlags {
  std::vector<int> torus;
  int base = 0;
  int factor = 1;
  int margin = 3;
  uint64_t seed = 0;
  std::string out;
};

void AddToastFlags(CLI::App& app, ToastGenFlags& f) {
  app.add_option("--torus", f.torus, "width and height")->expected(2)->required();
  app.add_option("--base", f.base, "leaf cell side")->required();
  app.add_option("--factor", f.factor, "children per side");
  app.add_option("--margin", f.margin, "separation between nested tiles");
  app.add_option("--seed", f.seed, "jitter seed");
}

TorusToastParams ToParams(const ToastGenFlags& f) {
  return {f.torus[0], f.torus[1], f.base, f.factor, f.margin, f.seed};
}

int ToastGen(const ToastGenFlags& f, std::ostream& out) {
  const Toast toast = GenerateTorusToast(ToParams(f));
  const Graph torus = Graph::Torus(f.torus[0], f.torus[1]);
  Emit(f.out, SerializeToast(torus, toast), out);
  return kExitOk;
}

// --- toast-check -----------------------------------------------------------

struct ToastCheckFlags {
  std::string graph;
  std::string toast;
  int k = 0;
};

int ToastCheck(const ToastCheckFlags& f, std::ostream& out) {
  const Graph graph = LoadGraph(f.graph);
  const Toast toast = ParseToast(graph, ReadFile(f.toast), f.toast);
  const ToastReport report = ValidateToast(graph, toast);
  bool ok = report.ok();
  for (const ToastViolation& v : report.violations) {
    out << "property " << v.property << ": tiles " << JoinIds(v.tiles);
    if (!v.edges.empty()) out << " (" << v.edges.size() << " edges)";
    out << ": " << v.detail << "\n";
  }
  if (f.k > 0) {
    const bool k_ok = IsKToast(graph, toast, f.k);
    out << f.k << "-toast: " << (k_ok ? "yes" : "no") << "\n";
    ok = ok && k_ok;
  }
  if (report.ok()) {
    out << "ok: " << toast.size() << " tiles, "
        << Stratify(toast).levels.size() << " levels\n";
  }
  return ok ? kExitOk : kExitFailed;
}

// --- round -----------------------------------------------------------------

struct RoundFlags {
  std::string graph;
  std::string toast;
  std::string flow;
  std::string demand;
  std::string capacity;
  std::string trace;
  std::string out;
  bool check_steps = false;
};

FlowProblem LoadProblem(const std::string& graph_path,
                        const std::string& demand_path,
                        const std::string& capacity_path) {
  FlowProblem problem;
  problem.graph = LoadGraph(graph_path);
  problem.demand =
      ParseDemand(problem.graph, ReadFile(demand_path), demand_path);
  if (!capacity_path.empty()) {
    problem.capacity =
        ParseCapacity(problem.graph, ReadFile(capacity_path), capacity_path);
  }
  return problem;
}

int Round(const RoundFlags& f, std::ostream& out, std::ostream& err) {
  const FlowProblem problem = LoadProblem(f.graph, f.demand, f.capacity);
  const Graph& g = problem.graph;
  const Toast toast = ParseToast(g, ReadFile(f.toast), f.toast);
  const Flow phi = ParseFlow(g, ReadFile(f.flow), f.flow);
  RoundingResult result;
  try {
    result = RoundFlow(problem, toast, phi, {f.check_steps});
  } catch (const CertifiedFailure& e) {
    err << "certified failure in tile " << e.tile() << " at edge "
        << e.edge() << ": " << e.what() << "\n";
    return kExitFailed;
  }
  if (!f.trace.empty()) {
    WriteFileAtomic(f.trace, SerializeTrace(g, result.trace.steps));
  }
  Emit(f.out, SerializeFlow(g, result.flow), out);
  if (!f.out.empty()) {
    out << "rounded: " << result.trace.steps.size() << " circuits, sup |psi - phi| = "
        << SupDistance(result.flow, phi) << "\n";
  }
  return kExitOk;
}

// --- check-flow ------------------------------------------------------------

struct CheckFlowFlags {
  std::string graph;
  std::string flow;
  std::string demand;
  std::string capacity;
  bool integral = false;
};

int CheckFlow(const CheckFlowFlags& f, std::ostream& out) {
  const FlowProblem problem = LoadProblem(f.graph, f.demand, f.capacity);
  const Graph& g = problem.graph;
  const Flow flow = ParseFlow(g, ReadFile(f.flow), f.flow);
  const FlowReport report = VerifyFlow(flow, problem);
  for (Vertex v : report.divergence_violations) {
    out << "divergence at " << g.id(v) << ": " << Divergence(g, flow, v)
        << " != " << problem.demand[v] << "\n";
  }
  for (EdgeId e : report.capacity_violations) {
    out << "capacity on " << g.id(g.edge(e).u) << "-" << g.id(g.edge(e).v)
        << ": |" << flow[e] << "| > " << (*problem.capacity)[e] << "\n";
  }
  bool ok = report.ok();
  if (f.integral && !flow.IsIntegral()) {
    out << "flow is not integral\n";
    ok = false;
  }
  if (ok) out << "ok\n";
  return ok ? kExitOk : kExitFailed;
}

// --- oracle ----------------------------------------------------------------

struct OracleFlags {
  std::string graph;
  std::string demand;
  std::string capacity;
  std::optional<int64_t> enumerate;
  std::string out;
};

int Oracle(const OracleFlags& f, std::ostream& out) {
  const FlowProblem problem = LoadProblem(f.graph, f.demand, f.capacity);
  problem.Validate();
  if (f.enumerate) {
    if (*f.enumerate < 0) throw ParameterError("--enumerate must be >= 0");
    const std::vector<Flow> flows = EnumerateIntegralFlows(problem, *f.enumerate);
    out << "integral flows with |value| <= " << *f.enumerate << ": "
        << flows.size() << "\n";
  }
  const std::optional<Flow> least = LexLeastIntegralFlow(problem);
  if (!least) {
    out << "infeasible\n";
    return kExitFailed;
  }
  out << "feasible\n";
  if (!f.out.empty()) WriteFileAtomic(f.out, SerializeFlow(problem.graph, *least));
  return kExitOk;
}

// --- gen-instance ----------------------------------------------------------

struct GenInstanceFlags {
  ToastGenFlags toast;
  int circuits = 0;
  std::vector<int64_t> denominators{3, 5, 7};
  std::string out_dir;
};

int GenInstance(const GenInstanceFlags& f, std::ostream& out) {
  InstanceParams params;
  params.toast = ToParams(f.toast);
  params.circuit_count = f.circuits;
  params.denominators = f.denominators;
  params.seed = f.toast.seed;
  const InstanceBundle bundle = RandomInstance(params);
  const Graph& g = bundle.problem.graph;
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(f.out_dir, ec);
  if (ec) throw FormatError(f.out_dir + ": cannot create directory");
  const fs::path dir(f.out_dir);
  WriteFileAtomic((dir / "graph.json").string(), SerializeGraph(g));
  WriteFileAtomic((dir / "toast.json").string(), SerializeToast(g, bundle.toast));
  WriteFileAtomic((dir / "flow.json").string(), SerializeFlow(g, bundle.phi));
  WriteFileAtomic((dir / "demand.json").string(),
                  SerializeDemand(g, bundle.problem.demand));
  WriteFileAtomic((dir / "witness.json").string(),
                  SerializeFlow(g, bundle.witness));
  out << "instance written to " << f.out_dir << "\n";
  return kExitOk;
}

// --- equidecomp ------------------------------------------------------------

struct EquidecompFlags {
  std::vector<int> torus;
  std::string set_a;
  std::string set_b;
  std::string epsilon = "1/2";
  std::string flow;
  std::string toast;
  std::string out;
};

// Integral chi_A - chi_B flow by maximum flow, doubling a uniform capacity
// until it is feasible.
Flow BoundedTransport(const Graph& g, const VertexSet& a, const VertexSet& b) {
  FlowProblem problem{g, IndicatorDemand(g, a, b), std::nullopt};
  for (int64_t c = 1;; c *= 2) {
    problem.capacity = std::vector<int64_t>(g.num_edges(), c);
    if (auto flow = FeasibleIntegralFlow(problem)) return *flow;
    if (c > static_cast<int64_t>(a.size())) {
      throw InfeasibleInput("no flow from A to B");
    }
  }
}

int Equidecomp(const EquidecompFlags& f, std::ostream& out, std::ostream& err) {
  const TorusAction action(f.torus[0], f.torus[1]);
  const Graph& g = action.graph();
  const VertexSet a = ParseVertexSet(g, ReadFile(f.set_a), f.set_a);
  const VertexSet b = ParseVertexSet(g, ReadFile(f.set_b), f.set_b);
  if (a.size() != b.size()) {
    err << "A has " << a.size() << " points, B has " << b.size() << "\n";
    return kExitFailed;
  }
  const Tiling tiling =
      FolnerTiling(action, ParseRationalFlag(f.epsilon, "--epsilon"));
  Flow psi;
  if (f.flow.empty()) {
    psi = BoundedTransport(g, a, b);
  } else {
    psi = ParseFlow(g, ReadFile(f.flow), f.flow);
    if (!psi.IsIntegral()) {
      if (f.toast.empty()) {
        throw ParameterError("--flow is not integral; pass --toast to round it");
      }
      const Toast toast = ParseToast(g, ReadFile(f.toast), f.toast);
      FlowProblem problem{g, IndicatorDemand(g, a, b), std::nullopt};
      psi = RoundFlow(problem, toast, psi).flow;
    }
  }
  Equidecomposition pieces;
  try {
    pieces = Equidecompose(action, a, b, tiling, psi);
  } catch (const DeficientTile& e) {
    err << e.what() << "\n";
    return kExitFailed;
  }
  Emit(f.out, SerializePieces(action, pieces), out);
  if (!f.out.empty()) {
    out << "pieces: " << pieces.pieces.size() << " (" << tiling.tiles.size()
        << " tiles of " << tiling.tiles[0].size() << ")\n";
  }
  return kExitOk;
}

// --- verify-pieces ---------------------------------------------------------

struct VerifyPiecesFlags {
  std::string pieces;
  std::string set_a;
  std::string set_b;
};

void PrintIds(std::ostream& out, const char* label,
              const std::vector<Vertex>& vs) {
  if (vs.empty()) return;
  out << label << ":";
  for (Vertex v : vs) out << " " << v;
  out << "\n";
}

int VerifyPieces(const VerifyPiecesFlags& f, std::ostream& out) {
  const PiecesFile file = ParsePieces(ReadFile(f.pieces), f.pieces);
  const TorusAction action(file.width, file.height);
  const Graph& g = action.graph();
  const VertexSet a = ParseVertexSet(g, ReadFile(f.set_a), f.set_a);
  const VertexSet b = ParseVertexSet(g, ReadFile(f.set_b), f.set_b);
  const EquidecompositionReport r =
      VerifyEquidecomposition(action, a, b, file.pieces);
  PrintIds(out, "duplicated source", r.duplicated_sources);
  PrintIds(out, "missing source", r.missing_sources);
  PrintIds(out, "extra source", r.extra_sources);
  PrintIds(out, "duplicated image", r.duplicated_images);
  PrintIds(out, "image outside B", r.foreign_images);
  PrintIds(out, "uncovered target", r.uncovered_targets);
  if (r.ok()) out << "ok: " << file.pieces.pieces.size() << " pieces\n";
  return r.ok() ? kExitOk : kExitFailed;
}

// --- render ----------------------------------------------------------------

struct RenderFlags {
  std::string pieces;
  std::string graph;
  std::string toast;
  std::string format = "svg";
  std::string out;
};

constexpr int kCell = 12;

// Distinct hues by golden-angle steps.
std::string Color(size_t index, int lightness = 55) {
  const int hue = static_cast<int>((index * 137) % 360);
  return "hsl(" + std::to_string(hue) + ",65%," + std::to_string(lightness) +
         "%)";
}

std::string SvgHeader(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n<rect width=\"100%\" height=\"100%\" "
         "fill=\"white\"/>\n";
}

std::string SvgCell(int x, int y, const std::string& fill) {
  return "<rect x=\"" + std::to_string(x * kCell) + "\" y=\"" +
         std::to_string(y * kCell) + "\" width=\"" + std::to_string(kCell) +
         "\" height=\"" + std::to_string(kCell) + "\" fill=\"" + fill +
         "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
}

std::string RenderPieces(const PiecesFile& file) {
  const TorusAction action(file.width, file.height);
  const Graph& g = action.graph();
  // Sources on the left, images on the right, one column of gap.
  const int offset = file.width + 1;
  std::string svg = SvgHeader((2 * file.width + 1) * kCell, file.height * kCell);
  for (size_t i = 0; i < file.pieces.pieces.size(); ++i) {
    const Piece& piece = file.pieces.pieces[i];
    for (Vertex v : piece.vertices) {
      const auto [x, y] = g.GridCoordinates(v);
      svg += SvgCell(x, y, Color(i));
      const auto [ix, iy] = g.GridCoordinates(action.Apply(piece.gamma, v));
      svg += SvgCell(offset + ix, iy, Color(i, 70));
    }
  }
  return svg + "</svg>\n";
}

std::vector<int> Depths(const Toast& toast) {
  std::vector<int> depth(toast.size(), 0);
  for (int i = 0; i < toast.size(); ++i) {
    for (auto p = toast.parent(i); p; p = toast.parent(*p)) ++depth[i];
  }
  return depth;
}

std::string RenderToastSvg(const Graph& g, const Toast& toast) {
  if (!g.grid()) throw UnsupportedInstance("svg rendering needs a grid graph");
  const std::vector<int> depth = Depths(toast);
  // Deepest tile owns each cell.
  std::vector<int> owner(g.num_vertices(), -1);
  for (int i = 0; i < toast.size(); ++i) {
    for (Vertex v : toast.tiles()[i].vertices) {
      if (owner[v] < 0 || depth[owner[v]] < depth[i]) owner[v] = i;
    }
  }
  std::string svg =
      SvgHeader(g.grid()->width * kCell, g.grid()->height * kCell);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (owner[v] < 0) continue;
    const auto [x, y] = g.GridCoordinates(v);
    svg += SvgCell(x, y, Color(owner[v], 40 + 12 * std::min(depth[owner[v]], 4)));
  }
  return svg + "</svg>\n";
}

std::string RenderToastDot(const Toast& toast) {
  std::ostringstream dot;
  dot << "digraph toast {\n  node [shape=box];\n";
  for (const Tile& t : toast.tiles()) {
    dot << "  t" << t.id << " [label=\"" << t.id << " (" << t.vertices.size()
        << ")\"];\n";
  }
  for (const Tile& t : toast.tiles()) {
    if (t.parent) dot << "  t" << *t.parent << " -> t" << t.id << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

int Render(const RenderFlags& f, std::ostream& out) {
  if (f.format != "svg" && f.format != "dot" && f.format != "json") {
    throw ParameterError("--format must be json, dot or svg");
  }
  if (!f.pieces.empty()) {
    if (f.format != "svg") throw ParameterError("pieces render only as svg");
    Emit(f.out, RenderPieces(ParsePieces(ReadFile(f.pieces), f.pieces)), out);
    return kExitOk;
  }
  if (f.graph.empty() || f.toast.empty()) {
    throw ParameterError("render needs --pieces, or --graph and --toast");
  }
  const Graph g = LoadGraph(f.graph);
  const Toast toast = ParseToast(g, ReadFile(f.toast), f.toast);
  if (f.format == "svg") {
    Emit(f.out, RenderToastSvg(g, toast), out);
  } else if (f.format == "dot") {
    Emit(f.out, RenderToastDot(toast), out);
  } else {
    Emit(f.out, SerializeToast(g, toast), out);
  }
  return kExitOk;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    (args.empty() ? err : out) << kUsage;
    return args.empty() ? kExitInput : kExitOk;
  }
  const std::string& command = args[0];
  CLI::App app("toastflow " + command, "toastflow " + command);
  std::function<int()> run;

  ToastGenFlags toast_gen;
  ToastCheckFlags toast_check;
  RoundFlags round;
  CheckFlowFlags check_flow;
  OracleFlags oracle;
  GenInstanceFlags gen;
  EquidecompFlags equi;
  VerifyPiecesFlags verify;
  RenderFlags render;

  if (command == "toast-gen") {
    AddToastFlags(app, toast_gen);
    app.add_option("--out", toast_gen.out, "toast file (stdout if absent)");
    run = [&] { return ToastGen(toast_gen, out); };
  } else if (command == "toast-check") {
    app.add_option("--graph", toast_check.graph)->required();
    app.add_option("--toast", toast_check.toast)->required();
    app.add_option("--k", toast_check.k, "also check the k-toast property");
    run = [&] { return ToastCheck(toast_check, out); };
  } else if (command == "round") {
    app.add_option("--graph", round.graph)->required();
    app.add_option("--toast", round.toast)->required();
    app.add_option("--flow", round.flow)->required();
    app.add_option("--demand", round.demand)->required();
    app.add_option("--capacity", round.capacity);
    app.add_option("--trace", round.trace, "write the step records here");
    app.add_option("--out", round.out, "rounded flow (stdout if absent)");
    app.add_flag("--check-steps", round.check_steps,
                 "verify divergence after every circuit");
    run = [&] { return Round(round, out, err); };
  } else if (command == "check-flow") {
    app.add_option("--graph", check_flow.graph)->required();
    app.add_option("--flow", check_flow.flow)->required();
    app.add_option("--demand", check_flow.demand)->required();
    app.add_option("--capacity", check_flow.capacity);
    app.add_flag("--integral", check_flow.integral, "also require integrality");
    run = [&] { return CheckFlow(check_flow, out); };
  } else if (command == "oracle") {
    app.add_option("--graph", oracle.graph)->required();
    app.add_option("--demand", oracle.demand)->required();
    app.add_option("--capacity", oracle.capacity)->required();
    app.add_option("--enumerate", oracle.enumerate,
                   "count integral flows with |value| <= N");
    app.add_option("--out", oracle.out, "lex-least integral flow");
    run = [&] { return Oracle(oracle, out); };
  } else if (command == "gen-instance") {
    AddToastFlags(app, gen.toast);
    app.add_option("--circuits", gen.circuits, "rational circuits added");
    app.add_option("--denominators", gen.denominators)->delimiter(',');
    app.add_option("--out-dir", gen.out_dir)->required();
    run = [&] { return GenInstance(gen, out); };
  } else if (command == "equidecomp") {
    app.add_option("--torus", equi.torus)->expected(2)->required();
    app.add_option("--set-a", equi.set_a)->required();
    app.add_option("--set-b", equi.set_b)->required();
    app.add_option("--epsilon", equi.epsilon, "Folner constant of the tiling");
    app.add_option("--flow", equi.flow, "chi_A - chi_B flow to follow");
    app.add_option("--toast", equi.toast, "toast for rounding a rational --flow");
    app.add_option("--out", equi.out, "pieces file (stdout if absent)");
    run = [&] { return Equidecomp(equi, out, err); };
  } else if (command == "verify-pieces") {
    app.add_option("--pieces", verify.pieces)->required();
    app.add_option("--set-a", verify.set_a)->required();
    app.add_option("--set-b", verify.set_b)->required();
    run = [&] { return VerifyPieces(verify, out); };
  } else if (command == "render") {
    app.add_option("--pieces", render.pieces);
    app.add_option("--graph", render.graph);
    app.add_option("--toast", render.toast);
    app.add_option("--format", render.format, "svg, dot or json");
    app.add_option("--out", render.out);
    run = [&] { return Render(render, out); };
  } else {
    err << "unknown command \"" << command << "\"\n" << kUsage;
    return kExitInput;
  }

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << command << ": " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    return run();
  } catch (const CertifiedFailure& e) {
    err << command << ": " << e.what() << "\n";
    return kExitFailed;
  } catch (const DeficientTile& e) {
    err << command << ": " << e.what() << "\n";
    return kExitFailed;
  } catch (const InfeasibleInput& e) {
    err << command << ": " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << command << ": " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace toastflow::cli
