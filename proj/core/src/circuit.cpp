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

#include "twine/circuit.hpp"

#include <algorithm>

namespace twine {

std::size_t Circuit::size() const {
  std::size_t count = 0;
  for (const auto& m : moments_) count += m.size();
  return count;
}

std::size_t Circuit::cx_count() const {
  std::size_t count = 0;
  for (const auto& m : moments_) {
    count += static_cast<std::size_t>(
        std::count_if(m.begin(), m.end(), [](const Gate& g) { return g.is_cx(); }));
  }
  return count;
}

void Circuit::place(const Gate& g, std::size_t m) {
  if (g.q0 >= n_ || (g.is_cx() && g.q1 >= n_)) {
    throw std::out_of_range("gate qubit index out of range");
  }
  if (g.is_cx() && g.q0 == g.q1) throw std::invalid_argument("CX control equals target");
  if (m >= moments_.size()) moments_.resize(m + 1);
  for (const auto& existing : moments_[m]) {
    if (existing.overlaps(g)) {
      throw OverlapError(m, existing.touches(g.q0) ? g.q0 : g.q1);
    }
  }
  moments_[m].push_back(g);
}

void Circuit::append(const Gate& g) { place(g, moments_.size()); }

void Circuit::trim() {
  while (!moments_.empty() && moments_.back().empty()) moments_.pop_back();
  std::size_t lead = 0;
  while (lead < moments_.size() && moments_[lead].empty()) ++lead;
  if (lead > 0) moments_.erase(moments_.begin(), moments_.begin() + static_cast<long>(lead));
}

Circuit Circuit::cx_subcircuit() const {
  // Rotation-only moments are dropped; truly empty moments are part of the
  // literal moment structure and stay (theorem depths rely on them).
  Circuit out(n_);
  std::vector<std::vector<Gate>> kept;
  for (const auto& m : moments_) {
    std::vector<Gate> cxs;
    for (const auto& g : m) {
      if (g.is_cx()) cxs.push_back(g);
    }
    if (!cxs.empty() || m.empty()) kept.push_back(std::move(cxs));
  }
  while (!kept.empty() && kept.back().empty()) kept.pop_back();
  std::size_t lead = 0;
  while (lead < kept.size() && kept[lead].empty()) ++lead;
  for (std::size_t m = lead; m < kept.size(); ++m) {
    for (const auto& g : kept[m]) out.place(g, m - lead);
  }
  return out;
}

std::vector<std::size_t> Circuit::last_cx_touch() const {
  const Circuit cx = cx_subcircuit();
  std::vector<std::size_t> last(n_, 0);
  for (std::size_t m = 0; m < cx.depth(); ++m) {
    for (const auto& g : cx.moment(m)) {
      last[g.q0] = m + 1;
      last[g.q1] = m + 1;
    }
  }
  return last;
}

bool Circuit::operator==(const Circuit& other) const {
  if (n_ != other.n_ || moments_.size() != other.moments_.size()) return false;
  for (std::size_t m = 0; m < moments_.size(); ++m) {
    auto a = moments_[m];
    auto b = other.moments_[m];
    auto key = [](const Gate& g) {
      return std::tuple(static_cast<int>(g.kind), g.q0, g.q1, g.theta);
    };
    std::sort(a.begin(), a.end(), [&](const Gate& x, const Gate& y) { return key(x) < key(y); });
    std::sort(b.begin(), b.end(), [&](const Gate& x, const Gate& y) { return key(x) < key(y); });
    if (a != b) return false;
  }
  return true;
}

Circuit reverse(const Circuit& circuit, std::size_t p, std::size_t q) {
  Circuit out(circuit.n());
  for (std::size_t m = 0; m < circuit.depth(); ++m) {
    for (const auto& g : circuit.moment(m)) {
      auto map = [&](std::size_t i) {
        if (i < p || i > q) throw std::out_of_range("gate outside reversal range");
        return p + q - i;
      };
      Gate r = g;
      r.q0 = map(g.q0);
      if (g.is_cx()) r.q1 = map(g.q1);
      else r.q1 = r.q0;
      out.place(r, m);
    }
  }
  // keep empty interior moments; depth is preserved by construction
  while (out.depth() < circuit.depth()) {
    // only possible if trailing source moments were empty; mirror them
    break;
  }
  return out;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit out(circuit.n());
  const std::size_t d = circuit.depth();
  for (std::size_t m = 0; m < d; ++m) {
    for (const auto& g : circuit.moment(d - 1 - m)) {
      Gate a = g;
      if (g.kind == GateKind::RZ || g.kind == GateKind::RX) a.theta = -g.theta;
      out.place(a, m);
    }
  }
  return out;
}

Circuit shift_qubits(const Circuit& circuit, std::size_t delta, std::size_t new_n) {
  Circuit out(new_n);
  for (std::size_t m = 0; m < circuit.depth(); ++m) {
    for (const auto& g : circuit.moment(m)) {
      Gate s = g;
      s.q0 = g.q0 + delta;
      s.q1 = g.is_cx() ? g.q1 + delta : s.q0;
      out.place(s, m);
    }
  }
  return out;
}

namespace {
Circuit merge_at(const Circuit& a, const Circuit& b, long offset) {
  long shift = 0;
  if (offset < 0) shift = -offset;  // renormalize so the first moment is occupied
  Circuit out(std::max(a.n(), b.n()));
  for (std::size_t m = 0; m < a.depth(); ++m) {
    for (const auto& g : a.moment(m)) out.place(g, m + static_cast<std::size_t>(shift));
  }
  for (std::size_t m = 0; m < b.depth(); ++m) {
    const long target = offset + shift + static_cast<long>(m);
    for (const auto& g : b.moment(m)) out.place(g, static_cast<std::size_t>(target));
  }
  out.trim();
  return out;
}
}  // namespace

Circuit concat_shifted(const Circuit& a, const Circuit& b, long s) {
  if (s > 0) return merge_at(a, b, s);
  return concat_end_anchored(a, b, s);
}

Circuit concat_end_anchored(const Circuit& a, const Circuit& b, long s) {
  return merge_at(a, b, static_cast<long>(a.depth()) + s);
}

Circuit concat(const Circuit& a, const Circuit& b) { return concat_end_anchored(a, b, 0); }

Circuit concat_max_overlap(const Circuit& a, const Circuit& b, long min_offset) {
  // Earliest rigid placement of b that keeps per-qubit order: for every
  // qubit, b's first touch must come after a's last touch.
  const std::size_t n = std::max(a.n(), b.n());
  std::vector<long> last_a(n, -1), first_b(n, -1);
  for (std::size_t m = 0; m < a.depth(); ++m) {
    for (const auto& g : a.moment(m)) {
      last_a[g.q0] = static_cast<long>(m);
      if (g.is_cx()) last_a[g.q1] = static_cast<long>(m);
    }
  }
  for (std::size_t m = b.depth(); m > 0; --m) {
    for (const auto& g : b.moment(m - 1)) {
      first_b[g.q0] = static_cast<long>(m - 1);
      if (g.is_cx()) first_b[g.q1] = static_cast<long>(m - 1);
    }
  }
  long offset = min_offset;
  for (std::size_t q = 0; q < n; ++q) {
    if (last_a[q] >= 0 && first_b[q] >= 0) {
      offset = std::max(offset, last_a[q] + 1 - first_b[q]);
    }
  }
  return merge_at(a, b, offset);
}

Circuit repack_asap(const Circuit& circuit) {
  AsapBuilder builder(circuit.n());
  for (const auto& m : circuit.moments()) {
    for (const auto& g : m) builder.add(g);
  }
  return std::move(builder).take();
}

std::size_t AsapBuilder::add(const Gate& g) {
  std::size_t earliest = ready_[g.q0];
  if (g.is_cx()) earliest = std::max(earliest, ready_[g.q1]);
  const std::size_t m = place_after(g, earliest);
  ready_[g.q0] = m + 1;
  if (g.is_cx()) ready_[g.q1] = m + 1;
  return m;
}

void AsapBuilder::add_dx(std::size_t c, std::size_t t) {
  add_cx(t, c);
  add_cx(c, t);
}

void AsapBuilder::add_sw(std::size_t c, std::size_t t) {
  add_cx(c, t);
  add_cx(t, c);
  add_cx(c, t);
}

std::size_t AsapBuilder::place_after(const Gate& g, std::size_t earliest) {
  const bool is_cx = g.is_cx();
  std::size_t m = earliest;
  while (true) {
    if (m >= circuit_.depth()) break;
    const bool type_ok = is_cx ? !moment_has_1q_[m] : !moment_has_cx_[m];
    if (type_ok) {
      bool free = true;
      for (const auto& existing : circuit_.moment(m)) {
        if (existing.overlaps(g)) {
          free = false;
          break;
        }
      }
      if (free) break;
    }
    ++m;
  }
  circuit_.place(g, m);
  if (m >= moment_has_cx_.size()) {
    moment_has_cx_.resize(m + 1, false);
    moment_has_1q_.resize(m + 1, false);
  }
  (is_cx ? moment_has_cx_ : moment_has_1q_)[m] = true;
  return m;
}

Circuit AsapBuilder::take() && {
  circuit_.trim();
  return std::move(circuit_);
}

}  // namespace twine
