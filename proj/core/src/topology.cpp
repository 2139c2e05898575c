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

#include "twine/topology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace twine {

std::string family_name(Family f) {
  switch (f) {
    case Family::Lnn: return "lnn";
    case Family::Ladder: return "ladder";
    case Family::Grid: return "grid";
    case Family::HeavyHex: return "heavy_hex";
    case Family::AllToAll: return "all_to_all";
    case Family::Custom: return "custom";
  }
  return "?";
}

ConnectivityGraph::ConnectivityGraph(std::size_t n,
                                     std::set<std::pair<std::size_t, std::size_t>> edges,
                                     Family family)
    : n_(n), family_(family) {
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop in connectivity graph");
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    edges_.insert({std::min(a, b), std::max(a, b)});
  }
}

bool ConnectivityGraph::has_edge(std::size_t a, std::size_t b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<std::size_t> ConnectivityGraph::neighbors_of(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ConnectivityGraph::connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::queue<std::size_t> work;
  work.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop();
    for (auto u : neighbors_of(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        work.push(u);
      }
    }
  }
  return count == n_;
}

ConnectivityGraph make_lnn(std::size_t n) {
  if (n < 2) throw std::invalid_argument("lnn needs n >= 2");
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.insert({i, i + 1});
  return ConnectivityGraph(n, std::move(edges), Family::Lnn);
}

ConnectivityGraph make_ladder(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("ladder needs even n >= 4");
  const std::size_t cols = n / 2;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < cols; ++j) {
    edges.insert({2 * j, 2 * j + 1});  // rung
    if (j + 1 < cols) {
      edges.insert({2 * j, 2 * (j + 1)});
      edges.insert({2 * j + 1, 2 * (j + 1) + 1});
    }
  }
  return ConnectivityGraph(n, std::move(edges), Family::Ladder);
}

ConnectivityGraph make_grid(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid needs rows, cols >= 2");
  auto id = [rows](std::size_t row, std::size_t col) { return col * rows + row; };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (r + 1 < rows) edges.insert({id(r, c), id(r + 1, c)});
      if (c + 1 < cols) edges.insert({id(r, c), id(r, c + 1)});
    }
  }
  ConnectivityGraph g(rows * cols, std::move(edges), Family::Grid);
  g.grid_rows = rows;
  g.grid_cols = cols;
  return g;
}

ConnectivityGraph make_heavy_hex(std::size_t cells) {
  // Bulk strip of a heavy-hexagon device: a spine path of 2*cells qubits
  // with a degree-1 pendant on every other spine node, so one out of three
  // qubits is an HGP neighbor.
  if (cells < 1) throw std::invalid_argument("heavy_hex needs cells >= 1");
  const std::size_t spine = 2 * cells;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < spine; ++i) edges.insert({i, i + 1});
  for (std::size_t i = 0; i < cells; ++i) edges.insert({2 * i + 1, spine + i});
  ConnectivityGraph g(3 * cells, std::move(edges), Family::HeavyHex);
  g.hex_cells = cells;
  return g;
}

ConnectivityGraph make_all_to_all(std::size_t n) {
  if (n < 2) throw std::invalid_argument("all_to_all needs n >= 2");
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.insert({i, j});
  }
  return ConnectivityGraph(n, std::move(edges), Family::AllToAll);
}

std::vector<std::size_t> Hgp::neighbors_of(std::size_t spine_node) const {
  auto it = neighbors.find(spine_node);
  return it == neighbors.end() ? std::vector<std::size_t>{} : it->second;
}

std::size_t Hgp::covered_count() const {
  std::size_t count = spine.size();
  for (const auto& [s, list] : neighbors) count += list.size();
  return count;
}

Hgp Hgp::reversed() const {
  Hgp out = *this;
  std::reverse(out.spine.begin(), out.spine.end());
  return out;
}

namespace {

Hgp grid_hgp(const ConnectivityGraph& g) {
  const std::size_t rows = g.grid_rows, cols = g.grid_cols;
  auto id = [rows](std::size_t row, std::size_t col) { return col * rows + row; };
  Hgp hgp;
  // Serpentine over one spine row per band of up to three rows; bands are
  // joined by two connector spine nodes in the boundary column.
  const std::size_t bands = (rows + 2) / 3;
  bool left_to_right = true;
  for (std::size_t b = 0; b < bands; ++b) {
    const std::size_t base = 3 * b;
    const std::size_t band_rows = std::min<std::size_t>(3, rows - base);
    // middle row when the band is full, else the row adjacent to the rest
    const std::size_t spine_row = band_rows == 3 ? base + 1 : base;
    for (std::size_t i = 0; i < cols; ++i) {
      const std::size_t c = left_to_right ? i : cols - 1 - i;
      const std::size_t s = id(spine_row, c);
      hgp.spine.push_back(s);
      std::vector<std::size_t> attach;
      for (std::size_t r = base; r < base + band_rows; ++r) {
        if (r == spine_row) continue;
        const std::size_t q = id(r, c);
        // boundary-column qubits between bands become connector spine nodes
        const bool last_col_of_band = (i + 1 == cols);
        const bool connector_row = (b + 1 < bands) && last_col_of_band && r > spine_row;
        if (!connector_row) attach.push_back(q);
      }
      if (!attach.empty()) hgp.neighbors[s] = attach;
    }
    if (b + 1 < bands) {
      // connectors: walk down the boundary column to the next band's spine row
      const std::size_t c = left_to_right ? cols - 1 : 0;
      const std::size_t next_band_rows = std::min<std::size_t>(3, rows - 3 * (b + 1));
      const std::size_t next_spine_row = next_band_rows == 3 ? 3 * (b + 1) + 1 : 3 * (b + 1);
      for (std::size_t r = spine_row + 1; r < next_spine_row; ++r) {
        hgp.spine.push_back(id(r, c));
      }
    }
    left_to_right = !left_to_right;
  }
  return hgp;
}

}  // namespace

Hgp builtin_hgp(const ConnectivityGraph& graph) {
  Hgp hgp;
  switch (graph.family()) {
    case Family::Lnn: {
      // all but the first and last qubit; the endpoints are the neighbors
      const std::size_t n = graph.n();
      if (n == 2) {
        hgp.spine = {0};
        hgp.neighbors[0] = {1};
        return hgp;
      }
      for (std::size_t i = 1; i + 1 < n; ++i) hgp.spine.push_back(i);
      hgp.neighbors[1] = {0};
      hgp.neighbors[n - 2].push_back(n - 1);
      return hgp;
    }
    case Family::AllToAll: {
      hgp.spine = {0};
      std::vector<std::size_t> rest;
      for (std::size_t i = 1; i < graph.n(); ++i) rest.push_back(i);
      hgp.neighbors[0] = rest;
      return hgp;
    }
    case Family::Ladder: {
      const std::size_t cols = graph.n() / 2;
      for (std::size_t j = 0; j < cols; ++j) {
        hgp.spine.push_back(2 * j);
        hgp.neighbors[2 * j] = {2 * j + 1};
      }
      hgp.parallel_rails = true;
      return hgp;
    }
    case Family::Grid:
      return grid_hgp(graph);
    case Family::HeavyHex: {
      const std::size_t cells = graph.hex_cells;
      for (std::size_t i = 0; i < 2 * cells; ++i) hgp.spine.push_back(i);
      for (std::size_t i = 0; i < cells; ++i) hgp.neighbors[2 * i + 1] = {2 * cells + i};
      return hgp;
    }
    case Family::Custom:
      throw std::invalid_argument("custom graph requires a user-supplied HGP");
  }
  throw std::logic_error("unknown family");
}

HgpCertificate validate_hgp(const ConnectivityGraph& graph, const Hgp& hgp) {
  HgpCertificate cert;
  cert.spine_size = hgp.spine.size();
  if (hgp.spine.empty()) {
    cert.violation = "empty spine";
    return cert;
  }
  std::vector<int> role(graph.n(), 0);  // 0 unseen, 1 spine, 2 neighbor
  for (std::size_t i = 0; i < hgp.spine.size(); ++i) {
    const std::size_t s = hgp.spine[i];
    if (s >= graph.n() || role[s] != 0) {
      cert.violation = "spine node repeated or out of range";
      return cert;
    }
    role[s] = 1;
    if (i > 0 && !graph.has_edge(hgp.spine[i - 1], s)) {
      cert.violation = "spine step " + std::to_string(i) + " is not an edge";
      return cert;
    }
  }
  for (const auto& [s, list] : hgp.neighbors) {
    if (s >= graph.n() || role[s] != 1) {
      cert.violation = "neighbor list attached to non-spine node " + std::to_string(s);
      return cert;
    }
    for (auto u : list) {
      if (u >= graph.n() || role[u] != 0) {
        cert.violation = "neighbor repeated, on spine, or out of range";
        return cert;
      }
      if (!graph.has_edge(s, u)) {
        cert.violation = "neighbor " + std::to_string(u) + " not adjacent to its spine node";
        return cert;
      }
      role[u] = 2;
      ++cert.neighbor_count;
    }
  }
  for (std::size_t q = 0; q < graph.n(); ++q) {
    if (role[q] == 0) {
      cert.violation = "qubit " + std::to_string(q) + " not covered";
      return cert;
    }
  }
  cert.ok = true;
  return cert;
}

}  // namespace twine
