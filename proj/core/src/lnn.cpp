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

#include "twine/lnn.hpp"

#include <map>
#include <stdexcept>

namespace twine {

std::string lnn_kind_name(LnnKind kind) {
  switch (kind) {
    case LnnKind::Ptc: return "ptc";
    case LnnKind::Cxc: return "cxc";
    case LnnKind::CxcMod: return "cxc_mod";
    case LnnKind::Swc: return "swc";
    case LnnKind::Ptn: return "ptn";
    case LnnKind::PtcMod: return "ptc_mod";
    case LnnKind::PtnMod: return "ptn_mod";
    case LnnKind::Ptn3: return "ptn3";
    case LnnKind::Ptn4: return "ptn4";
    case LnnKind::Cl: return "cl";
    case LnnKind::G2: return "g2";
    case LnnKind::G3: return "g3";
    case LnnKind::CleanSpecialG4: return "clean_special_g4";
    case LnnKind::CleanSpecialGk: return "clean_special_gk";
    case LnnKind::Gk: return "gk";
  }
  return "?";
}

std::optional<LnnKind> lnn_kind_from_name(const std::string& name) {
  static const std::map<std::string, LnnKind> table = {
      {"ptc", LnnKind::Ptc},         {"cxc", LnnKind::Cxc},
      {"cxc_mod", LnnKind::CxcMod},  {"swc", LnnKind::Swc},
      {"ptn", LnnKind::Ptn},         {"ptc_mod", LnnKind::PtcMod},
      {"ptn_mod", LnnKind::PtnMod},  {"ptn3", LnnKind::Ptn3},
      {"ptn4", LnnKind::Ptn4},       {"cl", LnnKind::Cl},
      {"g2", LnnKind::G2},           {"g3", LnnKind::G3},
      {"clean_special_g4", LnnKind::CleanSpecialG4},
      {"clean_special_gk", LnnKind::CleanSpecialGk},
      {"gk", LnnKind::Gk},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

// All builders work on a fixed register of n qubits and an inclusive
// 0-based qubit range [p, q]. Paper index expressions are 1-based; ranges
// here are their 0-based translations.

TaggedCircuit tc_empty(std::size_t n) { return TaggedCircuit{Circuit(n), {}}; }

TaggedCircuit tc_cx(std::size_t n, std::size_t c, std::size_t t) {
  TaggedCircuit tc{Circuit(n), {Block{Block::Kind::Cx, c, t}}};
  tc.circuit.place(Gate::cx(c, t), 0);
  return tc;
}

TaggedCircuit tc_concat_end(const TaggedCircuit& a, const TaggedCircuit& b, long s) {
  TaggedCircuit out;
  out.circuit = concat_end_anchored(a.circuit, b.circuit, s);
  out.blocks = a.blocks;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  return out;
}

TaggedCircuit tc_concat(const TaggedCircuit& a, const TaggedCircuit& b) {
  return tc_concat_end(a, b, 0);
}

TaggedCircuit tc_concat_left(const TaggedCircuit& a, const TaggedCircuit& b, long s) {
  TaggedCircuit out;
  out.circuit = concat_shifted(a.circuit, b.circuit, s);
  out.blocks = a.blocks;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  return out;
}

TaggedCircuit tc_reverse(const TaggedCircuit& a, std::size_t p, std::size_t q) {
  TaggedCircuit out;
  out.circuit = reverse(a.circuit, p, q);
  out.blocks.reserve(a.blocks.size());
  for (const auto& b : a.blocks) {
    out.blocks.push_back(Block{b.kind, p + q - b.c, p + q - b.t});
  }
  return out;
}

TaggedCircuit tc_adjoint(const TaggedCircuit& a) {
  TaggedCircuit out;
  out.circuit = adjoint(a.circuit);
  out.blocks.reserve(a.blocks.size());
  for (auto it = a.blocks.rbegin(); it != a.blocks.rend(); ++it) {
    Block b = *it;
    if (b.kind == Block::Kind::Dx) std::swap(b.c, b.t);  // DX(c,t)^† = DX(t,c)
    out.blocks.push_back(b);
  }
  return out;
}

TaggedCircuit tc_shift(const TaggedCircuit& a, std::size_t delta, std::size_t new_n) {
  TaggedCircuit out;
  out.circuit = shift_qubits(a.circuit, delta, new_n);
  out.blocks.reserve(a.blocks.size());
  for (const auto& b : a.blocks) {
    out.blocks.push_back(Block{b.kind, b.c + delta, b.t + delta});
  }
  return out;
}

// DX(c,t) = CX(t,c) then CX(c,t): pairs onto c, transports c's label to t.
TaggedCircuit tc_dx(std::size_t n, std::size_t c, std::size_t t) {
  TaggedCircuit tc{Circuit(n), {Block{Block::Kind::Dx, c, t}}};
  tc.circuit.place(Gate::cx(t, c), 0);
  tc.circuit.place(Gate::cx(c, t), 1);
  return tc;
}

TaggedCircuit tc_sw(std::size_t n, std::size_t c, std::size_t t) {
  TaggedCircuit tc{Circuit(n), {Block{Block::Kind::Sw, c, t}}};
  tc.circuit.place(Gate::cx(c, t), 0);
  tc.circuit.place(Gate::cx(t, c), 1);
  tc.circuit.place(Gate::cx(c, t), 2);
  return tc;
}

// PTC on [p, q]: DX(p,p+1) .. DX(q-1,q), sequential.
TaggedCircuit ptc(std::size_t n, std::size_t p, std::size_t q) {
  TaggedCircuit tc = tc_empty(n);
  for (std::size_t j = p; j < q; ++j) tc = tc_concat(tc, tc_dx(n, j, j + 1));
  return tc;
}

// CXC on [p, q]: CX(p,p+1) .. CX(q-1,q).
TaggedCircuit cxc(std::size_t n, std::size_t p, std::size_t q) {
  TaggedCircuit tc = tc_empty(n);
  for (std::size_t j = p; j < q; ++j) tc = tc_concat(tc, tc_cx(n, j, j + 1));
  return tc;
}

// Reversed CXC on [p, q]: CX(q,q-1) .. CX(p+1,p).
TaggedCircuit cxc_rev(std::size_t n, std::size_t p, std::size_t q) {
  return tc_reverse(cxc(n, p, q), p, q);
}

// Spaced CNOT chain on [p, q]: the first gate at moment 0, gate k at
// moment 2k-2, leaving room for a twine wave to interleave.
TaggedCircuit cxc_mod(std::size_t n, std::size_t p, std::size_t q) {
  TaggedCircuit tc = tc_empty(n);
  for (std::size_t j = p; j < q; ++j) {
    TaggedCircuit g = tc_cx(n, j, j + 1);
    tc = (j == p) ? g : tc_concat_left(tc, g, static_cast<long>(2 * (j - p)));
  }
  return tc;
}

TaggedCircuit swc(std::size_t n, std::size_t p, std::size_t q) {
  TaggedCircuit tc = tc_empty(n);
  for (std::size_t j = p; j < q; ++j) tc = tc_concat(tc, tc_sw(n, j, j + 1));
  return tc;
}

// PTC'^{(m)} on [0, m-1]: CX(0,1) then PTC on [1, m-1].
TaggedCircuit ptc_mod(std::size_t n, std::size_t m) {
  if (m < 2) throw std::invalid_argument("ptc_mod needs n >= 2");
  return tc_concat(tc_cx(n, 0, 1), ptc(n, 1, m - 1));
}

// PTN^{(m)}: chains PTC^{(l)} for l = m..2, each next network four moments in.
TaggedCircuit ptn(std::size_t n, std::size_t m) {
  if (m < 2) throw std::invalid_argument("ptn needs n >= 2");
  TaggedCircuit net = ptc(n, 0, 1);
  for (std::size_t l = 3; l <= m; ++l) net = tc_concat_left(ptc(n, 0, l - 1), net, 4);
  return net;
}

// PTN'^{(m)}: chains PTC'^{(l)} for l = m..3, then a trailing CX(0,1).
TaggedCircuit ptn_mod(std::size_t n, std::size_t m) {
  if (m < 3) throw std::invalid_argument("ptn_mod needs n >= 3");
  TaggedCircuit net = tc_concat(ptc_mod(n, 3), tc_cx(n, 0, 1));
  for (std::size_t l = 4; l <= m; ++l) net = tc_concat_left(ptc_mod(n, l), net, 4);
  return net;
}

// PTN_3^{(m)}: accumulating front (CX(1,2) + spaced chain on [2, m-1])
// with PTN'^{(m)} one moment in.
TaggedCircuit ptn3(std::size_t n, std::size_t m) {
  if (m < 3) throw std::invalid_argument("ptn3 needs n >= 3");
  TaggedCircuit front = tc_cx(n, 1, 2);
  if (m >= 4) front = tc_concat(front, cxc_mod(n, 2, m - 1));
  return tc_concat_left(front, ptn_mod(n, m), 1);
}

// PTN_4^{(m)}: spaced chain on [2, m-1] merged with (PTC^{(m)} with
// PTN'^{(1,m-1)} five moments in), anchored 2(m-3) before the chain's end.
TaggedCircuit ptn4(std::size_t n, std::size_t m) {
  if (m < 4) throw std::invalid_argument("ptn4 needs n >= 4");
  TaggedCircuit chain = cxc_mod(n, 2, m - 1);
  TaggedCircuit wave = tc_concat_left(ptc(n, 0, m - 1), ptn_mod(n, m - 1), 5);
  return tc_concat_end(chain, wave, -2 * (static_cast<long>(m) - 3));
}

// Post-cleanup CL^{(m)}.
TaggedCircuit cl(std::size_t n, std::size_t m) {
  if (m < 4) throw std::invalid_argument("cl needs n >= 4");
  const std::size_t mid = (m - 1 + 1) / 2;  // ceil((m-1)/2), 1-based value
  const std::size_t M = mid - 1;            // 0-based spine position
  const bool odd = (m % 2) == 1;
  TaggedCircuit tc =
      odd ? tc_cx(n, M + 1, M + 2) : tc_cx(n, M + 1, M);
  if (odd) tc = tc_concat(tc, swc(n, M, M + 2));
  tc = tc_concat(tc, ptc(n, M + 2, m - 1));
  tc = tc_concat(tc, tc_reverse(swc(n, M, m - 1), M, m - 1));
  tc = tc_concat(tc, tc_reverse(ptc(n, 0, M), 0, M));
  return tc;
}

long w_shift(std::size_t m) {
  // shift applied between a network on m+1 qubits and the mirrored
  // sub-assembly on m qubits, anchored at the end of the former
  if (m > 4) return -2 * (static_cast<long>(m) - 4);
  if (m == 4) return -1;
  return 0;
}

TaggedCircuit w3(std::size_t n, std::size_t m) {
  if (m == 3) return ptn3(n, 3);
  TaggedCircuit sub = w3(n - 1, m - 1);
  TaggedCircuit mirrored = tc_shift(tc_reverse(sub, 0, m - 2), 1, n);
  return tc_concat_end(ptn3(n, m), mirrored, w_shift(m - 1));
}

TaggedCircuit w4(std::size_t n, std::size_t m) {
  if (m == 4) return ptn4(n, 4);
  TaggedCircuit sub = w4(n - 1, m - 1);
  TaggedCircuit mirrored = tc_shift(tc_reverse(sub, 0, m - 2), 1, n);
  return tc_concat_end(ptn4(n, m), mirrored, w_shift(m - 1));
}

TaggedCircuit g2(std::size_t n) {
  if (n < 2) throw std::invalid_argument("g2 needs n >= 2");
  return tc_concat_end(ptn(n, n), cxc_rev(n, 0, n - 1), -(static_cast<long>(n) - 3));
}

TaggedCircuit g3(std::size_t n) {
  if (n < 3) throw std::invalid_argument("g3 needs n >= 3");
  TaggedCircuit tc = tc_adjoint(cxc(n, 0, n - 1));
  tc = tc_concat(tc, w3(n, n));
  const bool odd = (n % 2) == 1;
  const std::size_t c = odd ? (n + 1) / 2 : n / 2 - 1;
  const std::size_t t = odd ? (n + 1) / 2 - 1 : n / 2;
  return tc_concat(tc, tc_cx(n, c, t));
}

TaggedCircuit gs4(std::size_t n) {
  if (n < 4) throw std::invalid_argument("clean special g4 needs n >= 4");
  TaggedCircuit tc = tc_adjoint(cxc(n, 1, n - 1));
  tc = tc_concat(tc, w4(n, n));
  return tc_concat(tc, cl(n, n));
}

TaggedCircuit gsk(std::size_t n, std::size_t k);

TaggedCircuit wk(std::size_t n, std::size_t k) {
  if (n == k) return tc_concat(tc_cx(n, 0, 1), tc_shift(gsk(k - 1, k - 1), 1, n));
  TaggedCircuit tc = tc_cx(n, 0, 1);
  tc = tc_concat(tc, tc_shift(gsk(n - 1, k - 1), 1, n));
  tc = tc_concat(tc, tc_sw(n, 0, 1));
  return tc_concat(tc, tc_shift(wk(n - 1, k), 1, n));
}

TaggedCircuit gsk(std::size_t n, std::size_t k) {
  if (k < 4) throw std::invalid_argument("clean special generators start at k = 4");
  if (n < k) throw std::invalid_argument("clean special gk needs n >= k");
  if (k == 4) return gs4(n);
  TaggedCircuit tc = wk(n, k);
  tc = tc_concat(tc, tc_cx(n, n - k, n - k + 1));
  if (n > k) tc = tc_concat(tc, tc_reverse(ptc(n, 0, n - k), 0, n - k));
  return tc;
}

TaggedCircuit gk(std::size_t n, std::size_t k) {
  if (k < 2 || n < k) throw std::invalid_argument("gk needs n >= k >= 2");
  if (k == 2) return g2(n);
  if (k == 3) return g3(n);
  TaggedCircuit tc = gsk(n, k);
  for (std::size_t start = 1; start + k <= n; ++start) {
    tc = tc_concat(tc, tc_shift(gsk(n - start, k), start, n));
  }
  return tc;
}

TaggedCircuit tc_sw_expanded(std::size_t n, std::size_t p, std::size_t q) {
  return swc(n, p, q);
}

}  // namespace

TaggedCircuit build_lnn(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case LnnKind::Ptc:
      if (n < 1) throw std::invalid_argument("ptc needs n >= 1");
      return n == 1 ? tc_empty(1) : ptc(n, 0, n - 1);
    case LnnKind::Cxc:
      if (n < 2) throw std::invalid_argument("cxc needs n >= 2");
      return cxc(n, 0, n - 1);
    case LnnKind::CxcMod:
      if (n < 2) throw std::invalid_argument("cxc_mod needs n >= 2");
      return cxc_mod(n, 0, n - 1);
    case LnnKind::Swc:
      if (n < 2) throw std::invalid_argument("swc needs n >= 2");
      return tc_sw_expanded(n, 0, n - 1);
    case LnnKind::Ptn: return ptn(n, n);
    case LnnKind::PtcMod: return ptc_mod(n, n);
    case LnnKind::PtnMod: return ptn_mod(n, n);
    case LnnKind::Ptn3: return ptn3(n, n);
    case LnnKind::Ptn4: return ptn4(n, n);
    case LnnKind::Cl: return cl(n, n);
    case LnnKind::G2: return g2(n);
    case LnnKind::G3: return g3(n);
    case LnnKind::CleanSpecialG4: return gs4(n);
    case LnnKind::CleanSpecialGk: return gsk(n, spec.k);
    case LnnKind::Gk: return gk(n, spec.k);
  }
  throw std::logic_error("unknown lnn kind");
}

namespace {

std::size_t cl_size(std::size_t n) {
  const std::size_t m = n / 2;  // ceil((n-1)/2)
  return 5 * n - 3 * m - 5 + 6 * (n % 2);
}

std::size_t w3_size(std::size_t n) {
  // n^3/3 - 4n/3, exact in integers
  return (n * n * n - 4 * n) / 3;
}

std::size_t w3_depth(std::size_t n) {
  if (n == 3) return 5;
  if (n == 4) return 14;
  return n * n + 4 * n - 19;
}

}  // namespace

std::optional<ExpectedMetrics> expected_lnn_metrics(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case LnnKind::Ptc:
      return ExpectedMetrics{2 * (n - 1), 2 * (n - 1)};
    case LnnKind::Cxc:
      return ExpectedMetrics{n - 1, n - 1};
    case LnnKind::CxcMod:
      return ExpectedMetrics{n - 1, n >= 2 ? 2 * n - 3 : 0};
    case LnnKind::Swc:
      return ExpectedMetrics{3 * (n - 1), 3 * (n - 1)};
    case LnnKind::Ptn:
      return ExpectedMetrics{n * n - n, 4 * n - 6};
    case LnnKind::PtcMod:
      return ExpectedMetrics{2 * n - 3, 2 * n - 3};
    case LnnKind::PtnMod:
      return ExpectedMetrics{n * n - 2 * n + 1, 4 * n - 8};
    case LnnKind::Ptn3:
    case LnnKind::Ptn4:
      return ExpectedMetrics{n * n - n - 1, 4 * n - 7};
    case LnnKind::Cl:
      return ExpectedMetrics{cl_size(n), cl_size(n)};
    case LnnKind::G2:
      return ExpectedMetrics{n * n - 1, 4 * n - 4};
    case LnnKind::G3: {
      const std::size_t size = (n * n * n - n) / 3;
      std::size_t depth = 0;
      if (n == 3) depth = 8;
      else if (n == 4) depth = 18;
      else depth = n * n + 5 * n - 19;
      return ExpectedMetrics{size, depth};
    }
    case LnnKind::CleanSpecialG4: {
      const std::size_t size = (n - 2) + w3_size(n) - 5 + cl_size(n);
      const std::size_t depth = (n - 2) + w3_depth(n) - 5 + cl_size(n);
      return ExpectedMetrics{size, depth};
    }
    case LnnKind::CleanSpecialGk:
      if (spec.k == 4) {
        return expected_lnn_metrics(GeneratorSpec{LnnKind::CleanSpecialG4, n, 4});
      }
      return std::nullopt;  // asymptotic leading terms only
    case LnnKind::Gk:
      if (spec.k == 2) return expected_lnn_metrics(GeneratorSpec{LnnKind::G2, n, 2});
      if (spec.k == 3) return expected_lnn_metrics(GeneratorSpec{LnnKind::G3, n, 3});
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace twine
