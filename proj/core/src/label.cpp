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

#include "twine/label.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "twine/circuit.hpp"

namespace twine {

namespace {
constexpr std::size_t kMaxCapacity = 4096;
}

Label::Label(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {
  if (capacity > kMaxCapacity) {
    throw std::invalid_argument("label capacity exceeds " + std::to_string(kMaxCapacity));
  }
}

Label Label::single(std::size_t capacity, std::size_t id) {
  Label l(capacity);
  l.set(id);
  return l;
}

Label Label::from_ids(std::size_t capacity, const std::vector<std::size_t>& ids) {
  Label l(capacity);
  for (auto id : ids) l.set(id);
  return l;
}

bool Label::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Label::weight() const {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool Label::test(std::size_t id) const {
  if (id >= capacity_) throw std::out_of_range("label id out of range");
  return (words_[id / 64] >> (id % 64)) & 1u;
}

void Label::set(std::size_t id, bool value) {
  if (id >= capacity_) throw std::out_of_range("label id out of range");
  if (value) {
    words_[id / 64] |= (std::uint64_t{1} << (id % 64));
  } else {
    words_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
  }
}

Label& Label::operator^=(const Label& other) {
  if (other.capacity_ != capacity_) throw std::invalid_argument("label capacity mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool Label::operator==(const Label& other) const {
  return capacity_ == other.capacity_ && words_ == other.words_;
}

bool Label::operator<(const Label& other) const {
  if (capacity_ != other.capacity_) return capacity_ < other.capacity_;
  return std::lexicographical_compare(words_.rbegin(), words_.rend(), other.words_.rbegin(),
                                      other.words_.rend());
}

std::vector<std::size_t> Label::ids() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string Label::str() const {
  std::string out = "{";
  bool first = true;
  for (auto id : ids()) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  out += "}";
  return out;
}

std::size_t Label::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

bool Gate::overlaps(const Gate& other) const {
  auto on = [](const Gate& g, std::size_t q) { return g.touches(q); };
  if (on(other, q0)) return true;
  if (is_cx() && on(other, q1)) return true;
  return false;
}

bool Gate::operator==(const Gate& other) const {
  return kind == other.kind && q0 == other.q0 && (!is_cx() || q1 == other.q1) &&
         theta == other.theta;
}

LabelState LabelState::basis(std::size_t n, bool track_x) {
  LabelState s;
  s.z_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) s.z_.push_back(Label::single(n, j));
  if (track_x) {
    s.x_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) s.x_.push_back(Label::single(n, j));
  }
  return s;
}

LabelState LabelState::from_z(std::vector<Label> z) {
  LabelState s;
  s.z_ = std::move(z);
  return s;
}

void LabelState::apply(const Gate& g) {
  const std::size_t n = size();
  if (g.q0 >= n || (g.is_cx() && g.q1 >= n)) {
    throw std::out_of_range("gate qubit index out of range");
  }
  switch (g.kind) {
    case GateKind::CX:
      z_[g.q1] ^= z_[g.q0];
      if (tracks_x()) x_[g.q0] ^= x_[g.q1];
      break;
    case GateKind::H:
      if (!tracks_x()) {
        throw std::logic_error("H gate requires x-label tracking");
      }
      std::swap(z_[g.q0], x_[g.q0]);
      break;
    case GateKind::RZ:
    case GateKind::RX:
      break;  // rotations leave tracked labels unchanged
  }
}

namespace {
// Gaussian elimination over GF(2) on a copy of the rows.
bool rows_invertible(std::vector<Label> rows) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (rows[r].test(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return false;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && rows[r].test(col)) rows[r] ^= rows[col];
    }
  }
  return true;
}
}  // namespace

bool LabelState::z_is_basis() const { return rows_invertible(z_); }

bool LabelState::xz_dual() const {
  if (!tracks_x()) return false;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (Z X^T)_{ij} = parity of |z_i & x_j|
      std::size_t parity = 0;
      for (auto id : z_[i].ids()) parity ^= static_cast<std::size_t>(x_[j].test(id));
      if (parity != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> LabelState::single_label_permutation() const {
  std::vector<std::size_t> perm(size());
  std::vector<bool> seen(size(), false);
  for (std::size_t q = 0; q < size(); ++q) {
    if (z_[q].weight() != 1) return std::nullopt;
    const std::size_t id = z_[q].ids()[0];
    if (id >= size() || seen[id]) return std::nullopt;
    seen[id] = true;
    perm[q] = id;
  }
  return perm;
}

bool LabelState::operator==(const LabelState& other) const {
  return z_ == other.z_ && x_ == other.x_;
}

RunResult run_and_collect(const Circuit& circuit, const LabelState& start) {
  if (!circuit.empty() && circuit.n() != start.size()) {
    throw std::invalid_argument("circuit qubit count does not match state size");
  }
  RunResult result;
  result.final_state = start;
  for (std::size_t q = 0; q < start.size(); ++q) result.collected.insert(start.z(q));
  for (const auto& moment : circuit.moments()) {
    for (const auto& g : moment) result.final_state.apply(g);
    for (std::size_t q = 0; q < start.size(); ++q) {
      result.collected.insert(result.final_state.z(q));
    }
  }
  return result;
}

std::set<Label> all_k_body_labels(std::size_t n, std::size_t k) {
  std::set<Label> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.insert(Label::from_ids(n, pick));
    // next combination
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (pick[i] != i + n - k) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace twine
