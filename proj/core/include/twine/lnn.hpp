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
#include <vector>

#include "twine/circuit.hpp"
#include "twine/metrics.hpp"

namespace twine {

/// Linear-chain building blocks and generators. Sizes and depths follow
/// exact closed forms (see expected_metrics); every CX joins adjacent
/// qubits of the chain.
enum class LnnKind {
  Ptc,            // parity twine chain of DCNOTs
  Cxc,            // CNOT chain
  CxcMod,         // spaced CNOT chain (interleavable)
  Swc,            // SWAP chain
  Ptn,            // twine network, generates all two-body labels
  PtcMod,         // twine chain with a leading special-link CX
  PtnMod,         // modified network, special three-body generator
  Ptn3,           // network with re-encoding front, special three-body
  Ptn4,           // network with extra special label, four-body core
  Cl,             // post-cleanup block
  G2,             // clean two-body generator
  G3,             // clean three-body generator
  CleanSpecialG4, // clean special four-body generator
  CleanSpecialGk, // recursive clean special k-body generator, k >= 4
  Gk,             // k-body generator for any k >= 2
};

std::string lnn_kind_name(LnnKind kind);
std::optional<LnnKind> lnn_kind_from_name(const std::string& name);

struct GeneratorSpec {
  LnnKind kind = LnnKind::Ptn;
  std::size_t n = 2;
  std::size_t k = 2;  // body order for CleanSpecialGk / Gk
};

/// Primitive block stream recorded alongside the exact circuit. The blocks
/// appear in dependency order; replaying them sequentially reproduces the
/// circuit's action. Used by the all-to-all compressor to tell DCNOT and
/// SWAP patterns apart.
struct Block {
  enum class Kind { Dx, Sw, Cx } kind;
  std::size_t c = 0;
  std::size_t t = 0;
};

struct TaggedCircuit {
  Circuit circuit;
  std::vector<Block> blocks;
};

/// Builds the exact moment structure of the requested block. Throws on
/// invalid specs; an internal OverlapError indicates a construction bug.
TaggedCircuit build_lnn(const GeneratorSpec& spec);

/// Closed-form size/depth where a theorem provides one; nullopt for
/// kinds with only asymptotic leading terms (Gk, CleanSpecialGk at k >= 5).
struct ExpectedMetrics {
  std::size_t size = 0;
  std::size_t depth = 0;
};
std::optional<ExpectedMetrics> expected_lnn_metrics(const GeneratorSpec& spec);

}  // namespace twine
