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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace twine {

enum class Family { Lnn, Ladder, Grid, HeavyHex, AllToAll, Custom };

std::string family_name(Family f);

/// Undirected device connectivity graph. Node orderings of the built-in
/// families:
///   lnn(n):        0 - 1 - ... - n-1
///   ladder(n):     node = 2*col + rail, rail 0/1; rungs + both rails
///   grid(r,c):     node = c_idx*r + row (column-major)
///   heavy_hex(k):  spine path 0..2k-1, pendant 2k+i attached to 2i+1
///   all_to_all(n): complete graph
class ConnectivityGraph {
 public:
  ConnectivityGraph() = default;
  ConnectivityGraph(std::size_t n, std::set<std::pair<std::size_t, std::size_t>> edges,
                    Family family = Family::Custom);

  std::size_t n() const { return n_; }
  Family family() const { return family_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbors_of(std::size_t v) const;
  bool connected() const;

  // family parameters where applicable
  std::size_t grid_rows = 0, grid_cols = 0;
  std::size_t hex_cells = 0;

 private:
  std::size_t n_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
  Family family_ = Family::Custom;
};

ConnectivityGraph make_lnn(std::size_t n);
ConnectivityGraph make_ladder(std::size_t n);  // n even, two rails of n/2
ConnectivityGraph make_grid(std::size_t rows, std::size_t cols);
ConnectivityGraph make_heavy_hex(std::size_t cells);  // 3*cells qubits
ConnectivityGraph make_all_to_all(std::size_t n);

/// Hamiltonian grid path: an ordered spine (a simple path in the graph)
/// plus, per spine node, an ordered list of attached non-spine qubits.
/// Spine and neighbors together cover every qubit.
struct Hgp {
  std::vector<std::size_t> spine;
  std::map<std::size_t, std::vector<std::size_t>> neighbors;
  bool parallel_rails = false;  // ladder: schedule rail waves in parallel

  std::vector<std::size_t> neighbors_of(std::size_t spine_node) const;
  std::size_t covered_count() const;
  Hgp reversed() const;
};

/// Built-in minimal HGP per family. Custom graphs must carry their own.
Hgp builtin_hgp(const ConnectivityGraph& graph);

struct HgpCertificate {
  bool ok = false;
  std::string violation;  // empty when ok
  std::size_t spine_size = 0;
  std::size_t neighbor_count = 0;
};

HgpCertificate validate_hgp(const ConnectivityGraph& graph, const Hgp& hgp);

}  // namespace twine
