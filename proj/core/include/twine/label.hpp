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
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace twine {

/// A parity label: a set of logical qubit ids under symmetric difference,
/// stored as a packed bit vector. The group operation is XOR of the words,
/// so combining two labels costs O(capacity/64).
class Label {
 public:
  Label() = default;
  explicit Label(std::size_t capacity);

  /// Single-qubit label {id}.
  static Label single(std::size_t capacity, std::size_t id);
  /// Label from an explicit id set.
  static Label from_ids(std::size_t capacity, const std::vector<std::size_t>& ids);

  std::size_t capacity() const { return capacity_; }
  bool empty() const;
  std::size_t weight() const;  // number of set bits (body order)
  bool test(std::size_t id) const;
  void set(std::size_t id, bool value = true);

  /// In-place symmetric difference.
  Label& operator^=(const Label& other);
  friend Label operator^(Label a, const Label& b) { return a ^= b; }

  bool operator==(const Label& other) const;
  bool operator!=(const Label& other) const { return !(*this == other); }
  bool operator<(const Label& other) const;  // lexicographic on words, for std::set

  std::vector<std::size_t> ids() const;
  std::string str() const;  // e.g. "{0,3,5}"

  std::size_t hash() const;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

enum class GateKind { CX, RZ, RX, H };

/// One gate. CX uses (q0 = control, q1 = target); single-qubit kinds use q0.
struct Gate {
  GateKind kind = GateKind::CX;
  std::size_t q0 = 0;
  std::size_t q1 = 0;
  double theta = 0.0;

  static Gate cx(std::size_t c, std::size_t t) { return Gate{GateKind::CX, c, t, 0.0}; }
  static Gate rz(std::size_t q, double theta) { return Gate{GateKind::RZ, q, q, theta}; }
  static Gate rx(std::size_t q, double theta) { return Gate{GateKind::RX, q, q, theta}; }
  static Gate h(std::size_t q) { return Gate{GateKind::H, q, q, 0.0}; }

  bool is_cx() const { return kind == GateKind::CX; }
  bool touches(std::size_t q) const { return q0 == q || (is_cx() && q1 == q); }
  bool overlaps(const Gate& other) const;
  bool operator==(const Gate& other) const;
};

class Circuit;  // fwd

/// Tracked z labels (and optionally x labels) of an n-qubit register.
/// Entry j is the label currently carried by physical qubit j.
class LabelState {
 public:
  LabelState() = default;
  /// Computational start: z_j = {j}, and x_j = {j} when track_x is set.
  static LabelState basis(std::size_t n, bool track_x = false);
  static LabelState from_z(std::vector<Label> z);

  std::size_t size() const { return z_.size(); }
  bool tracks_x() const { return !x_.empty(); }

  const Label& z(std::size_t q) const { return z_[q]; }
  const Label& x(std::size_t q) const { return x_[q]; }
  const std::vector<Label>& z_labels() const { return z_; }
  const std::vector<Label>& x_labels() const { return x_; }
  Label& mutable_z(std::size_t q) { return z_[q]; }

  /// Applies one gate. CX maps z_t <- z_c ^ z_t and, when tracked,
  /// x_c <- x_c ^ x_t. H swaps the z and x label of its qubit and
  /// requires x tracking. Rotations leave labels unchanged.
  void apply(const Gate& g);

  /// True when the z labels form a GF(2) basis.
  bool z_is_basis() const;
  /// True when Z * X^T = I over GF(2) (dual pair). Requires x tracking.
  bool xz_dual() const;

  /// If the z labels are a permutation of single-qubit labels, returns
  /// perm with perm[q] = logical id sitting on qubit q.
  std::optional<std::vector<std::size_t>> single_label_permutation() const;

  bool operator==(const LabelState& other) const;

 private:
  std::vector<Label> z_;
  std::vector<Label> x_;
};

/// Runs a circuit over a start state and collects every z label occurring
/// after each moment prefix, including the start labels.
struct RunResult {
  LabelState final_state;
  std::set<Label> collected;
};
RunResult run_and_collect(const Circuit& circuit, const LabelState& start);

/// All k-body labels over n logical qubits (capacity taken from n).
std::set<Label> all_k_body_labels(std::size_t n, std::size_t k);

}  // namespace twine
