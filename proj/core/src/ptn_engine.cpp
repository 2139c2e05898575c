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

#include "ptn_engine.hpp"

namespace twine::engine {

namespace {

std::vector<std::size_t> spine_prefix(const std::vector<std::size_t>& spine, std::size_t end) {
  return std::vector<std::size_t>(spine.begin(), spine.begin() + static_cast<long>(end) + 1);
}

/// Plan for path-with-attachments HGPs (lnn, grids, heavy-hex strips).
/// Walks the spine from the tail, retiring each spine node and its
/// attachments so that consecutively retired qubits stay adjacent for the
/// decode chain wherever the geometry allows.
PtnPlan plan_path(const ConnectivityGraph& graph, const Hgp& hgp) {
  PtnPlan plan;
  std::vector<bool> active(graph.n(), true);
  auto retire = [&](std::size_t q, bool fixup) {
    plan.retire_order.push_back(q);
    plan.needs_fixup.push_back(fixup);
    active[q] = false;
  };
  auto prev = [&]() { return plan.retire_order.empty() ? npos : plan.retire_order.back(); };
  auto adjacent = [&](std::size_t a, std::size_t b) {
    return a != npos && graph.has_edge(a, b);
  };

  long t = static_cast<long>(hgp.spine.size()) - 1;
  while (t >= 0) {
    const std::size_t T = static_cast<std::size_t>(t);
    const std::size_t s = hgp.spine[T];
    std::vector<std::size_t> nbrs;
    for (auto u : hgp.neighbors_of(s)) {
      if (active[u]) nbrs.push_back(u);
    }
    if (nbrs.size() >= 2) {
      std::size_t u = nbrs[0];
      for (auto cand : nbrs) {
        if (adjacent(prev(), cand)) {
          u = cand;
          break;
        }
      }
      std::size_t v = npos;
      for (auto cand : nbrs) {
        if (cand != u) {
          v = cand;
          break;
        }
      }
      plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Transport, u, npos});
      retire(u, false);
      plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Rest, s, npos});
      retire(s, false);
      if (t == 0) {
        plan.leftover = v;
        return plan;
      }
      const std::size_t s_prev = hgp.spine[T - 1];
      std::size_t w = npos;
      for (auto cand : hgp.neighbors_of(s_prev)) {
        if (active[cand] && graph.has_edge(cand, v)) {
          w = cand;
          break;
        }
      }
      if (w == npos) {
        throw std::logic_error("no lateral link for second-neighbor retirement");
      }
      plan.passes.push_back({spine_prefix(hgp.spine, T - 1), Pass::Ending::Transport2, v, w});
      retire(v, false);
      --t;
    } else if (nbrs.size() == 1) {
      const std::size_t u = nbrs[0];
      if (t == 0) {
        if (adjacent(prev(), u) || prev() == npos) {
          plan.passes.push_back({spine_prefix(hgp.spine, 0), Pass::Ending::Transport, u, npos});
          retire(u, false);
          plan.leftover = s;
        } else {
          plan.passes.push_back({spine_prefix(hgp.spine, 0), Pass::Ending::Rest, s, npos});
          retire(s, false);
          plan.leftover = u;
        }
        return plan;
      }
      std::size_t w = npos;
      const std::size_t s_prev = hgp.spine[T - 1];
      for (auto cand : hgp.neighbors_of(s_prev)) {
        if (active[cand] && graph.has_edge(cand, u)) {
          w = cand;
          break;
        }
      }
      if (adjacent(prev(), u)) {
        plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Transport, u, npos});
        retire(u, false);
        plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Rest, s, npos});
        retire(s, false);
      } else if (w != npos && adjacent(prev(), s)) {
        plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Rest, s, npos});
        retire(s, false);
        plan.passes.push_back({spine_prefix(hgp.spine, T - 1), Pass::Ending::Transport2, u, w});
        retire(u, false);
      } else {
        // pendant without a lateral link (heavy-hex); the decode fixes it up
        plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Transport, u, npos});
        retire(u, true);
        plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Rest, s, npos});
        retire(s, false);
      }
      --t;
    } else {
      if (t == 0) {
        plan.leftover = s;
        return plan;
      }
      plan.passes.push_back({spine_prefix(hgp.spine, T), Pass::Ending::Rest, s, npos});
      retire(s, false);
      --t;
    }
  }
  throw std::logic_error("retirement plan did not terminate at the spine head");
}

/// Ladder plan: passes alternate rails so consecutive waves ride three
/// moments apart; every pass rests its label at the tail of its rail.
PtnPlan plan_ladder(const Hgp& hgp) {
  PtnPlan plan;
  const std::size_t cols = hgp.spine.size();
  std::vector<std::size_t> rail_a = hgp.spine;
  std::vector<std::size_t> rail_b;
  for (auto s : hgp.spine) rail_b.push_back(hgp.neighbors_of(s).at(0));
  for (std::size_t j = cols; j >= 1; --j) {
    plan.passes.push_back(
        {std::vector<std::size_t>(rail_a.begin(), rail_a.begin() + static_cast<long>(j)),
         Pass::Ending::Rest, rail_a[j - 1], npos});
    plan.retire_order.push_back(rail_a[j - 1]);
    plan.needs_fixup.push_back(false);
    if (j == 1) break;
    plan.passes.push_back(
        {std::vector<std::size_t>(rail_b.begin(), rail_b.begin() + static_cast<long>(j)),
         Pass::Ending::Rest, rail_b[j - 1], npos});
    plan.retire_order.push_back(rail_b[j - 1]);
    plan.needs_fixup.push_back(false);
  }
  plan.leftover = rail_b[0];
  return plan;
}

}  // namespace

PtnPlan make_ptn_plan(const ConnectivityGraph& graph, const Hgp& hgp) {
  if (hgp.parallel_rails) return plan_ladder(hgp);
  return plan_path(graph, hgp);
}

}  // namespace twine::engine
