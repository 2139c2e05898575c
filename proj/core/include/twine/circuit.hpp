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
#include <stdexcept>
#include <string>
#include <vector>

#include "twine/label.hpp"

namespace twine {

/// Raised when a shifted concatenation or placement would put two gates on
/// the same qubit in the same moment.
class OverlapError : public std::runtime_error {
 public:
  OverlapError(std::size_t moment, std::size_t qubit)
      : std::runtime_error("gate overlap at moment " + std::to_string(moment) +
                           ", qubit " + std::to_string(qubit)),
        moment(moment),
        qubit(qubit) {}
  std::size_t moment;
  std::size_t qubit;
};

/// An ordered sequence of moments; each moment is a set of gates on
/// disjoint qubits. The first and last moments of a non-empty circuit are
/// non-empty, interior moments may be empty.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t depth() const { return moments_.size(); }
  bool empty() const { return moments_.empty(); }
  const std::vector<std::vector<Gate>>& moments() const { return moments_; }
  const std::vector<Gate>& moment(std::size_t m) const { return moments_[m]; }

  std::size_t size() const;      // total gate count
  std::size_t cx_count() const;  // CX gates only

  /// Places a gate into moment m (0-based), growing the circuit as needed.
  /// Throws OverlapError when the moment already touches one of its qubits.
  void place(const Gate& g, std::size_t m);

  /// Appends a gate in a fresh moment at the end.
  void append(const Gate& g);

  /// Drops trailing/leading empty moments (the invariant requires non-empty
  /// first and last moments).
  void trim();

  /// Moments of the CX sub-circuit: rotation-only moments are dropped and
  /// non-CX gates removed. Metric and theorem checks run on this view.
  Circuit cx_subcircuit() const;

  /// Last CX-moment index (within cx_subcircuit numbering, 1-based) that
  /// touches each qubit; 0 for untouched qubits.
  std::vector<std::size_t> last_cx_touch() const;

  bool operator==(const Circuit& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Gate>> moments_;
};

/// Reverses a circuit between qubits p and q (inclusive): CX(i,j) becomes
/// CX(p+q-i, p+q-j) and single-qubit gates move the same way; the moment
/// structure is preserved. Gates outside p..q are rejected.
Circuit reverse(const Circuit& circuit, std::size_t p, std::size_t q);

/// Adjoint: moments reversed, each gate replaced by its adjoint
/// (CX and H are self-adjoint, rotations negate their angle).
Circuit adjoint(const Circuit& circuit);

/// Remaps every gate qubit index by +delta.
Circuit shift_qubits(const Circuit& circuit, std::size_t delta, std::size_t new_n);

/// Shifted concatenation. s > 0 anchors b at moment s counted from the
/// start of a; s <= 0 anchors b at depth(a) + s (s = 0 is plain
/// concatenation). When the anchor is negative the whole result is
/// shifted right until the first moment is occupied. Overlaps throw.
Circuit concat_shifted(const Circuit& a, const Circuit& b, long s);

/// Concatenation with an explicit anchor measured from the end of a, for
/// builders whose shift expressions may change sign: b starts at
/// depth(a) + s for any integer s.
Circuit concat_end_anchored(const Circuit& a, const Circuit& b, long s);

/// Plain concatenation.
Circuit concat(const Circuit& a, const Circuit& b);

/// Merges b into a at the smallest offset >= min_offset with no overlap,
/// additionally preserving per-qubit gate order (no gate of b lands before
/// the last gate of a on a shared qubit). Used for depth-packed assemblies
/// where the exact shift is not theorem-bound.
Circuit concat_max_overlap(const Circuit& a, const Circuit& b, long min_offset = 0);

/// Repacks every gate as early as possible, preserving per-qubit gate
/// order. CX gates and single-qubit gates never share a moment, so CX
/// metrics are unaffected by interleaved rotation moments. Never applied
/// implicitly.
Circuit repack_asap(const Circuit& circuit);

/// Incremental as-soon-as-possible assembler used by the graph-adapted
/// builders: gates are emitted in dependency order and scheduled at the
/// earliest moment that respects per-qubit ordering. Single-qubit gates
/// get rotation-only moments.
class AsapBuilder {
 public:
  explicit AsapBuilder(std::size_t n) : circuit_(n), ready_(n, 0) {}

  /// Returns the moment the gate was placed in.
  std::size_t add(const Gate& g);
  void add_cx(std::size_t c, std::size_t t) { add(Gate::cx(c, t)); }
  /// DCNOT: CX(t,c) then CX(c,t); pairs onto c and transports c's label to t.
  void add_dx(std::size_t c, std::size_t t);
  /// SWAP expanded into three CX moments.
  void add_sw(std::size_t c, std::size_t t);

  /// Earliest moment a gate on these qubits could go (0-based).
  std::size_t ready(std::size_t q) const { return ready_[q]; }

  const Circuit& circuit() const { return circuit_; }
  Circuit take() &&;

 private:
  std::size_t place_after(const Gate& g, std::size_t earliest);
  Circuit circuit_;
  std::vector<std::size_t> ready_;            // next free moment per qubit
  std::vector<bool> moment_has_cx_;
  std::vector<bool> moment_has_1q_;
};

}  // namespace twine
