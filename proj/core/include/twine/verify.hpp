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

#include <complex>
#include <optional>
#include <set>
#include <vector>

#include "twine/circuit.hpp"
#include "twine/label.hpp"
#include "twine/topology.hpp"

namespace twine {

struct Certificate {
  std::set<Label> generated;
  std::set<Label> missing;
  bool clean = false;
  std::optional<std::vector<std::size_t>> permutation;  // qubit -> logical id
  bool connectivity_ok = true;
  std::optional<std::pair<std::size_t, Gate>> first_violation;  // (moment, gate)

  bool generator_ok() const { return missing.empty(); }
};

/// Runs the circuit, collects every occurring z label and reports which
/// targets are missing. clean is set when the final state is a permutation
/// of the start's single labels.
Certificate generator_check(const Circuit& circuit, const LabelState& start,
                            const std::set<Label>& target);

/// Flags the first CX acting on a pair that is not an edge of the graph.
Certificate connectivity_check(const Circuit& circuit, const ConnectivityGraph& graph);

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;  // row-major, 2^n x 2^n

/// Dense unitary of a circuit, qubit 0 = most significant bit. Capped at
/// 12 qubits by default; the TWINE_MAX_DENSE_N environment variable
/// overrides the cap.
Matrix dense_unitary(const Circuit& circuit);

std::size_t dense_unitary_cap();

Matrix identity_matrix(std::size_t dim);
Matrix matmul(const Matrix& a, const Matrix& b);

/// Applies the wire permutation (wire w of the reference appears on wire
/// perm[w] of the tested unitary), strips the global phase via the
/// largest-magnitude entry, and compares in max norm.
struct EquivResult {
  bool equal = false;
  double max_error = 0.0;
};
EquivResult equal_up_to_perm_phase(const Matrix& tested, const Matrix& reference,
                                   const std::vector<std::size_t>& perm,
                                   double tolerance = 1e-9);

/// Basis-relabeling operator: returns the matrix of |b_0..b_{n-1}> ->
/// basis state with bit w moved to position perm[w].
Matrix wire_permutation_matrix(const std::vector<std::size_t>& perm);

}  // namespace twine
