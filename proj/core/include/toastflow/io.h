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


#ifndef TOASTFLOW_IO_H_
#define TOASTFLOW_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toastflow/equidecomp.h"
#include "toastflow/flow.h"
#include "toastflow/graph.h"
#include "toastflow/rounding.h"
#include "toastflow/toast.h"

// JSON file formats. Vertices are written by external id, edges as "u-v"
// keys with u < v, rationals as reduced "p/q" strings (integers without
// "/q"). Parsers throw FormatError with the source name and, for syntax
// errors, the byte offset. Output is deterministic: fixed key order, two-space
// indentation, trailing newline.

namespace toastflow {

// {"vertices":[...],"edges":[[u,v],...]} or {"torus":[w,h]}.
Graph ParseGraph(std::string_view text, const std::string& source = "graph");
std::string SerializeGraph(const Graph& graph);

// {"flow":{"u-v":"p/q",...}}; absent edges are zero.
Flow ParseFlow(const Graph& graph, std::string_view text,
               const std::string& source = "flow");
std::string SerializeFlow(const Graph& graph, const Flow& flow);

// {"demand":{"id":int,...}}; absent vertices are zero.
std::vector<int64_t> ParseDemand(const Graph& graph, std::string_view text,
                                 const std::string& source = "demand");
std::string SerializeDemand(const Graph& graph,
                            const std::vector<int64_t>& demand);

// {"capacity":{"u-v":int,...},"default":int}; "default" is optional but
// then every edge must be listed.
std::vector<int64_t> ParseCapacity(const Graph& graph, std::string_view text,
                                   const std::string& source = "capacity");
std::string SerializeCapacity(const Graph& graph,
                              const std::vector<int64_t>& capacity);

// {"tiles":[{"id":int,"parent":int|null,"vertices":[...]},...]}
Toast ParseToast(const Graph& graph, std::string_view text,
                 const std::string& source = "toast");
std::string SerializeToast(const Graph& graph, const Toast& toast);

// {"vertices":[...]}
VertexSet ParseVertexSet(const Graph& graph, std::string_view text,
                         const std::string& source = "vertices");
std::string SerializeVertexSet(const Graph& graph, const VertexSet& set);

// {"torus":[w,h],"pieces":[{"gamma":[a,b],"vertices":[...]},...]}
struct PiecesFile {
  int width = 0;
  int height = 0;
  Equidecomposition pieces;
};
PiecesFile ParsePieces(std::string_view text,
                       const std::string& source = "pieces");
std::string SerializePieces(const TorusAction& action,
                            const Equidecomposition& pieces);

// A list of step records, one per circuit.
std::vector<RoundingStep> ParseTrace(const Graph& graph, std::string_view text,
                                     const std::string& source = "trace");
std::string SerializeTrace(const Graph& graph,
                           const std::vector<RoundingStep>& steps);

// Whole-file read; FormatError naming the path on failure.
std::string ReadFile(const std::string& path);
// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::string& path, std::string_view contents);

}  // namespace toastflow

#endif  // TOASTFLOW_IO_H_
