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

// Internal pass engine shared by the graph-adapted generators and the
// algorithm synthesizers. A "pass" walks a traveling label along the HGP
// spine, pairing every active label, and parks it on the retirement slot;
// the emitted retire order makes the decode a CX chain with local fixups.

#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "twine/circuit.hpp"
#include "twine/topology.hpp"

namespace twine::engine {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Pass {
  enum class Ending { Rest, Transport, Transport2 };
  std::vector<std::size_t> travel;
  Ending ending = Ending::Rest;
  std::size_t target = npos;
  std::size_t via = npos;
};

struct PtnPlan {
  std::vector<Pass> passes;
  std::vector<std::size_t> retire_order;
  std::vector<bool> needs_fixup;
  std::size_t leftover = npos;
};

PtnPlan make_ptn_plan(const ConnectivityGraph& graph, const Hgp& hgp);

inline std::vector<std::size_t> active_partners(const ConnectivityGraph& graph,
                                                const std::vector<bool>& active,
                                                std::size_t node,
                                                const std::vector<std::size_t>& path) {
  std::vector<std::size_t> out;
  for (auto u : graph.neighbors_of(node)) {
    if (!active[u]) continue;
    if (std::find(path.begin(), path.end(), u) != path.end()) continue;
    out.push_back(u);
  }
  return out;
}

/// Builder must provide add_cx, add_dx, add_sw.
template <class Builder>
void emit_pass(Builder& builder, const ConnectivityGraph& graph, std::vector<bool>& active,
               const Pass& pass, std::size_t link_from = npos) {
  if (link_from != npos) builder.add_cx(link_from, pass.travel.front());
  const std::size_t tail = pass.travel.back();
  for (std::size_t i = 0; i < pass.travel.size(); ++i) {
    const std::size_t s = pass.travel[i];
    for (auto u : active_partners(graph, active, s, pass.travel)) {
      if (s == tail) {
        if (u == pass.target) continue;  // parked by the ending instead
        if (pass.ending == Pass::Ending::Transport2 && u == pass.via) continue;
      }
      builder.add_cx(s, u);
    }
    if (i + 1 < pass.travel.size()) builder.add_dx(s, pass.travel[i + 1]);
  }
  switch (pass.ending) {
    case Pass::Ending::Rest:
      break;
    case Pass::Ending::Transport:
      builder.add_dx(tail, pass.target);
      break;
    case Pass::Ending::Transport2:
      builder.add_dx(tail, pass.via);
      builder.add_dx(pass.via, pass.target);
      break;
  }
  active[pass.target] = false;
}

/// Moves the decoded carrier along already-decoded qubits via SWAPs.
template <class Builder>
bool route_carrier(Builder& builder, const ConnectivityGraph& graph,
                   const std::vector<bool>& decoded, std::size_t from, std::size_t goal,
                   std::size_t& carrier) {
  std::vector<std::size_t> parent(graph.n(), npos);
  std::queue<std::size_t> work;
  work.push(from);
  parent[from] = from;
  std::size_t found = npos;
  while (!work.empty() && found == npos) {
    const std::size_t v = work.front();
    work.pop();
    if (graph.has_edge(v, goal)) {
      found = v;
      break;
    }
    for (auto u : graph.neighbors_of(v)) {
      if (u != goal && decoded[u] && parent[u] == npos) {
        parent[u] = v;
        work.push(u);
      }
    }
  }
  if (found == npos) return false;
  std::vector<std::size_t> path;
  for (std::size_t v = found; v != from; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  std::size_t at = from;
  for (auto v : path) {
    builder.add_sw(at, v);
    at = v;
  }
  carrier = at;
  return true;
}

/// CX chain along the retirement order, with pendant fixups where the
/// chain cannot pass and swap-routing through decoded qubits for lateral
/// steps.
template <class Builder>
void emit_decode(Builder& builder, const ConnectivityGraph& graph, const PtnPlan& plan) {
  std::vector<std::size_t> order = plan.retire_order;
  std::vector<bool> fix = plan.needs_fixup;
  order.push_back(plan.leftover);
  fix.push_back(false);

  std::vector<bool> decoded(graph.n(), false);
  decoded[order[0]] = true;  // the first retired label is already a single
  std::size_t carrier = order[0];

  struct PendingFix {
    std::size_t pendant, parent, feeder;
  };
  std::vector<PendingFix> pending;

  std::size_t i = 1;
  while (i < order.size()) {
    const std::size_t prev = carrier;
    if (i + 1 < order.size() && fix[i]) {
      // pendant whose only neighbor is the next retiree: fold the pendant
      // into its parent, decode the parent, fix the pendant afterwards
      const std::size_t pendant = order[i];
      const std::size_t parent = order[i + 1];
      if (!graph.has_edge(pendant, parent)) {
        throw std::logic_error("fixup retiree is not attached to its successor");
      }
      std::size_t feeder = prev;
      if (!graph.has_edge(feeder, parent)) {
        if (!route_carrier(builder, graph, decoded, feeder, parent, feeder)) {
          throw std::logic_error("decode chain cannot feed the fixup parent");
        }
      }
      builder.add_cx(pendant, parent);
      builder.add_cx(feeder, parent);
      decoded[parent] = true;
      carrier = parent;
      pending.push_back({pendant, parent, feeder});
      i += 2;
      continue;
    }
    const std::size_t next = order[i];
    if (graph.has_edge(prev, next)) {
      builder.add_cx(prev, next);
    } else {
      std::size_t moved = prev;
      if (!route_carrier(builder, graph, decoded, prev, next, moved)) {
        throw std::logic_error("decode chain cannot reach the next retiree");
      }
      builder.add_cx(moved, next);
    }
    decoded[next] = true;
    carrier = next;
    for (auto it = pending.begin(); it != pending.end();) {
      if (decoded[it->parent]) {
        builder.add_sw(it->parent, it->pendant);
        builder.add_cx(it->feeder, it->parent);
        decoded[it->pendant] = true;
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
    ++i;
  }
  for (const auto& p : pending) {
    builder.add_sw(p.parent, p.pendant);
    builder.add_cx(p.feeder, p.parent);
  }
}

}  // namespace twine::engine
