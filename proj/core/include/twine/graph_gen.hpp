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

#include <cstddef>
#include <vector>

#include "twine/circuit.hpp"
#include "twine/lnn.hpp"
#include "twine/topology.hpp"

namespace twine {

/// Running map logical wire -> device qubit maintained while virtual swaps
/// replace physical ones on fully connected devices.
struct VirtualPermutation {
  std::vector<std::size_t> perm;  // wire -> device qubit
  std::vector<std::pair<std::size_t, std::size_t>> history;

  static VirtualPermutation identity(std::size_t n);
  void swap_wires(std::size_t a, std::size_t b);
};

/// Rewrites a chain circuit for an all-to-all device: every DCNOT becomes
/// one CX under the running permutation and every SWAP becomes a pure
/// permutation update, so the DCNOT cost halves. The input must carry the
/// block tags produced by build_lnn.
struct CompressResult {
  Circuit circuit;
  VirtualPermutation vperm;
};
CompressResult compress_all_to_all(const TaggedCircuit& tagged);

/// Untagged variant: valid only for circuits without SWAP patterns, where
/// compression is the identity transform. Throws when a literal
/// CX(a,b)/CX(b,a)/CX(a,b) swap pattern is present.
CompressResult compress_all_to_all(const Circuit& circuit);

/// Twine chain along a Hamiltonian grid path: DCNOTs travel the spine and
/// one CX per attached neighbor pairs the traveling label with it, so the
/// label starting at start_node reaches every qubit. start_node must be
/// the spine head or one of its neighbors.
Circuit ptc_graph(const ConnectivityGraph& graph, const Hgp& hgp, std::size_t start_node);

/// Two-body label generator: shrinking chain passes, each parking its
/// traveling label on the next retirement slot so every pair of labels
/// meets. Generates all two-body labels; final state is pair-encoded.
Circuit ptn_graph(const ConnectivityGraph& graph, const Hgp& hgp);

/// ptn_graph followed by the family decode; output is a permutation of the
/// input single labels.
Circuit g2_graph(const ConnectivityGraph& graph, const Hgp& hgp);

/// Encodes the label of special_node into every other label, leaving the
/// special label alone on special_node. special_node must be a neighbor of
/// the spine head (or the head itself on two-qubit devices).
Circuit initializer(const ConnectivityGraph& graph, const Hgp& hgp, std::size_t special_node);

/// Three-body generator from chained clean special blocks on shrinking
/// qubit sets, alternating plain and reversed-adjoint orientation.
Circuit g3_graph(const ConnectivityGraph& graph, const Hgp& hgp);

}  // namespace twine
