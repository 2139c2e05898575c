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

#include "twine/graph_gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptn_engine.hpp"

namespace twine {

using engine::npos;
using engine::Pass;
using engine::PtnPlan;

VirtualPermutation VirtualPermutation::identity(std::size_t n) {
  VirtualPermutation vp;
  vp.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) vp.perm[i] = i;
  return vp;
}

void VirtualPermutation::swap_wires(std::size_t a, std::size_t b) {
  std::swap(perm[a], perm[b]);
  history.emplace_back(a, b);
}

CompressResult compress_all_to_all(const TaggedCircuit& tagged) {
  const std::size_t n = tagged.circuit.n();
  CompressResult result;
  result.vperm = VirtualPermutation::identity(n);
  AsapBuilder builder(n);
  auto& p = result.vperm.perm;
  for (const auto& b : tagged.blocks) {
    switch (b.kind) {
      case Block::Kind::Dx:
        builder.add_cx(p[b.c], p[b.t]);
        result.vperm.swap_wires(b.c, b.t);
        break;
      case Block::Kind::Sw:
        result.vperm.swap_wires(b.c, b.t);
        break;
      case Block::Kind::Cx:
        builder.add_cx(p[b.c], p[b.t]);
        break;
    }
  }
  result.circuit = std::move(builder).take();
  return result;
}

CompressResult compress_all_to_all(const Circuit& circuit) {
  // Without block tags a SWAP cannot be told apart from three plain CX
  // gates, so only swap-free circuits are accepted; they compress to
  // themselves.
  const auto& moments = circuit.moments();
  auto cx_at = [&](std::size_t m, std::size_t a, std::size_t b) {
    if (m >= moments.size()) return false;
    for (const auto& g : moments[m]) {
      if (g.is_cx() && g.q0 == a && g.q1 == b) return true;
    }
    return false;
  };
  for (std::size_t m = 0; m + 2 < moments.size(); ++m) {
    for (const auto& g : moments[m]) {
      if (g.is_cx() && cx_at(m + 1, g.q1, g.q0) && cx_at(m + 2, g.q0, g.q1)) {
        throw std::invalid_argument("untagged SWAP-bearing input cannot be compressed");
      }
    }
  }
  CompressResult result;
  result.circuit = circuit;
  result.vperm = VirtualPermutation::identity(circuit.n());
  return result;
}

namespace {

void check_hgp(const ConnectivityGraph& graph, const Hgp& hgp) {
  const HgpCertificate cert = validate_hgp(graph, hgp);
  if (!cert.ok) throw std::invalid_argument("invalid HGP: " + cert.violation);
}

TaggedCircuit lnn_equivalent(std::size_t n, LnnKind kind) {
  return build_lnn(GeneratorSpec{kind, n, 2});
}

}  // namespace

Circuit ptc_graph(const ConnectivityGraph& graph, const Hgp& hgp, std::size_t start_node) {
  check_hgp(graph, hgp);
  AsapBuilder builder(graph.n());
  std::vector<bool> active(graph.n(), true);
  if (start_node != hgp.spine.front()) {
    const auto head_nbrs = hgp.neighbors_of(hgp.spine.front());
    if (std::find(head_nbrs.begin(), head_nbrs.end(), start_node) == head_nbrs.end()) {
      throw std::invalid_argument("start node must be the spine head or one of its neighbors");
    }
    builder.add_dx(start_node, hgp.spine.front());
    active[start_node] = false;
  }
  Pass pass{hgp.spine, Pass::Ending::Rest, hgp.spine.back(), npos};
  engine::emit_pass(builder, graph, active, pass);
  return std::move(builder).take();
}

Circuit ptn_graph(const ConnectivityGraph& graph, const Hgp& hgp) {
  if (graph.family() == Family::AllToAll) {
    return compress_all_to_all(lnn_equivalent(graph.n(), LnnKind::Ptn)).circuit;
  }
  check_hgp(graph, hgp);
  const PtnPlan plan = engine::make_ptn_plan(graph, hgp);
  AsapBuilder builder(graph.n());
  std::vector<bool> active(graph.n(), true);
  for (const auto& pass : plan.passes) engine::emit_pass(builder, graph, active, pass);
  return std::move(builder).take();
}

Circuit g2_graph(const ConnectivityGraph& graph, const Hgp& hgp) {
  if (graph.family() == Family::AllToAll) {
    return compress_all_to_all(lnn_equivalent(graph.n(), LnnKind::G2)).circuit;
  }
  check_hgp(graph, hgp);
  const PtnPlan plan = engine::make_ptn_plan(graph, hgp);
  AsapBuilder builder(graph.n());
  std::vector<bool> active(graph.n(), true);
  for (const auto& pass : plan.passes) engine::emit_pass(builder, graph, active, pass);
  engine::emit_decode(builder, graph, plan);
  return std::move(builder).take();
}

Circuit initializer(const ConnectivityGraph& graph, const Hgp& hgp, std::size_t special_node) {
  check_hgp(graph, hgp);
  const auto& spine = hgp.spine;
  const auto head_nbrs = hgp.neighbors_of(spine.front());
  const bool special_is_head_neighbor =
      std::find(head_nbrs.begin(), head_nbrs.end(), special_node) != head_nbrs.end();
  if (!special_is_head_neighbor && special_node != spine.front()) {
    throw std::invalid_argument("special node must neighbor the spine head");
  }
  AsapBuilder builder(graph.n());
  // pair chain: attachments pair with their spine node, spine nodes pair
  // consecutively from the tail toward the head
  for (std::size_t i = spine.size(); i-- > 0;) {
    for (auto u : hgp.neighbors_of(spine[i])) {
      if (u != special_node) builder.add_cx(spine[i], u);
    }
    if (i > 0) builder.add_cx(spine[i - 1], spine[i]);
  }
  // accumulate chain: fold the special label outward, unpairing en route.
  // When the special is the head spine node itself, the pair chain already
  // put the special pairing on the second spine node.
  auto unpair = [&](std::size_t s) {
    for (auto u : hgp.neighbors_of(s)) {
      if (u != special_node) builder.add_cx(s, u);
    }
  };
  std::size_t start_index = 0;
  if (special_is_head_neighbor) {
    builder.add_cx(special_node, spine.front());
  } else {
    if (spine.size() < 2) return std::move(builder).take();
    start_index = 1;
  }
  unpair(spine[start_index]);
  for (std::size_t i = start_index; i + 1 < spine.size(); ++i) {
    builder.add_cx(spine[i], spine[i + 1]);
    unpair(spine[i + 1]);
  }
  return std::move(builder).take();
}

namespace {

/// One clean special three-body block over the active sub-HGP: the
/// initializer folds the special into every label, linked passes generate
/// every three-body label containing it, and the decode restores singles.
Circuit g3_block(const ConnectivityGraph& graph, const Hgp& active_hgp,
                 std::size_t special_node) {
  AsapBuilder builder(graph.n());
  {
    Circuit init = initializer(graph, active_hgp, special_node);
    for (const auto& m : init.moments()) {
      for (const auto& g : m) builder.add(g);
    }
  }
  // sub-HGP without the special node
  Hgp sub = active_hgp;
  if (special_node == sub.spine.front()) {
    sub.spine.erase(sub.spine.begin());
    sub.neighbors.erase(special_node);
  } else {
    auto& list = sub.neighbors[active_hgp.spine.front()];
    list.erase(std::remove(list.begin(), list.end(), special_node), list.end());
    if (list.empty()) sub.neighbors.erase(active_hgp.spine.front());
  }
  const PtnPlan plan = engine::make_ptn_plan(graph, sub);
  std::vector<bool> active(graph.n(), false);
  for (auto s : sub.spine) active[s] = true;
  for (const auto& [s, list] : sub.neighbors) {
    for (auto u : list) active[u] = true;
  }
  for (const auto& pass : plan.passes) {
    engine::emit_pass(builder, graph, active, pass, special_node);
  }
  engine::emit_decode(builder, graph, plan);
  builder.add_cx(special_node, plan.leftover);  // strip the special pairing
  return std::move(builder).take();
}

}  // namespace

Circuit g3_graph(const ConnectivityGraph& graph, const Hgp& hgp) {
  switch (graph.family()) {
    case Family::Grid:
    case Family::HeavyHex:
    case Family::Lnn:
      break;
    default:
      throw std::invalid_argument("three-body graph generator supports grid, heavy_hex, lnn");
  }
  check_hgp(graph, hgp);
  std::vector<std::size_t> spine = hgp.spine;
  std::map<std::size_t, std::vector<std::size_t>> pendants = hgp.neighbors;
  std::size_t lo = 0, hi = spine.size() - 1;
  auto active_count = [&]() {
    std::size_t count = hi - lo + 1;
    for (std::size_t i = lo; i <= hi; ++i) {
      auto it = pendants.find(spine[i]);
      if (it != pendants.end()) count += it->second.size();
    }
    return count;
  };

  Circuit total(graph.n());
  bool forward = true;
  while (lo <= hi && active_count() >= 3) {
    Hgp active;
    for (std::size_t i = lo; i <= hi; ++i) {
      active.spine.push_back(spine[i]);
      auto it = pendants.find(spine[i]);
      if (it != pendants.end() && !it->second.empty()) active.neighbors[spine[i]] = it->second;
    }
    if (!forward) active = active.reversed();
    const std::size_t head = active.spine.front();
    std::size_t special = npos;
    auto it = active.neighbors.find(head);
    if (it != active.neighbors.end() && !it->second.empty()) {
      special = it->second.front();
    } else if (active.spine.size() >= 2) {
      special = head;
    } else {
      break;
    }
    Circuit block = g3_block(graph, active, special);
    if (!forward) block = adjoint(block);
    total = total.empty() ? block : concat_max_overlap(total, block);
    if (special == head) {
      if (forward) ++lo;
      else --hi;
    } else {
      auto& list = pendants[head];
      list.erase(std::remove(list.begin(), list.end(), special), list.end());
      if (list.empty()) pendants.erase(head);
    }
    forward = !forward;
  }
  return total;
}

}  // namespace twine
