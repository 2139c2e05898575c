// Copyright 2026 The Twine Authors
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

#pragma once

#include <optional>
#include <string>

#include "twine/apps.hpp"
#include "twine/circuit.hpp"
#include "twine/topology.hpp"

namespace twine {

/// Circuit JSON: {"n": int, "moments": [[{"kind":"cx","c":i,"t":j} |
/// {"kind":"rz","q":i,"theta":x} | {"kind":"rx",...} | {"kind":"h","q":i}]]}.
/// Qubit indices are 0-based wire positions.
std::string circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const std::string& text);

/// Graph JSON: {"n": int, "edges": [[i,j],...], "family": optional string,
/// "hgp": optional {"spine": [...], "neighbors": {"i": [...]}}}.
struct GraphFile {
  ConnectivityGraph graph;
  std::optional<Hgp> hgp;
};
std::string graph_to_json(const ConnectivityGraph& graph, const std::optional<Hgp>& hgp);
GraphFile graph_from_json(const std::string& text);

/// Problem JSON: {"n": int, "J": [[j,k,val]], "h": [[j,val]],
/// "M": [[l,j,k,val]], "g": optional [[j,val]] for transverse fields}.
struct ProblemFile {
  QuboProblem problem;
  std::map<std::size_t, double> g;
};
std::string problem_to_json(const ProblemFile& problem);
ProblemFile problem_from_json(const std::string& text);

/// OPENQASM 2.0 subset: one register q[n], gates cx/rz/rx/h, barriers
/// between moments so the moment structure round-trips exactly.
std::string circuit_to_qasm(const Circuit& circuit);
Circuit circuit_from_qasm(const std::string& text);

}  // namespace twine
