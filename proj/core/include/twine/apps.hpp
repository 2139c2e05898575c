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

#include <map>
#include <tuple>
#include <vector>

#include "twine/circuit.hpp"
#include "twine/graph_gen.hpp"
#include "twine/topology.hpp"

namespace twine {

/// Sparse QUBO/HUBO problem: sum of J_{jk} Z_j Z_k, h_j Z_j and optional
/// three-body M_{ljk} Z_l Z_j Z_k terms.
struct QuboProblem {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, double> j;        // (j < k)
  std::map<std::size_t, double> h;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double> m;  // (l < j < k)

  void validate() const;
};

/// Where each rotation was inserted: at the recorded moment the recorded
/// qubit carries exactly the recorded label (z label for RZ, x label for
/// RX). Verified by replaying the tracking over the circuit.
struct RotationRecord {
  std::size_t moment;
  std::size_t qubit;
  Label label;
  double angle;
  GateKind axis;  // RZ or RX
};
using RotationSchedule = std::vector<RotationRecord>;

bool replay_schedule(const Circuit& circuit, const RotationSchedule& schedule);

struct SynthResult {
  Circuit circuit;
  RotationSchedule schedule;
  /// Significance order of the logical register: bit_order[r] = logical
  /// qubit playing the r-th register bit of the reference transform.
  std::vector<std::size_t> bit_order;
  /// Final z-label permutation: out_perm[q] = logical id on qubit q.
  std::vector<std::size_t> out_perm;
};

/// Connectivity-adapted quantum Fourier transform: shrinking twine-chain
/// passes with z rotations at pair creation and Hadamards (decomposed into
/// RZ RX RZ) between passes, plus the family decode. Supported families:
/// lnn, all_to_all, grid, heavy_hex, ladder.
SynthResult synth_qft(const ConnectivityGraph& graph, const Hgp& hgp);

/// Approximate QFT on all-to-all devices: drops every CX (and rotation)
/// whose controlled-phase angle pi/2^d is below the threshold. Threshold 0
/// reproduces the exact circuit.
SynthResult synth_qft_approx(std::size_t n, double threshold_angle);

/// QAOA circuit: p cycles of a two-body (or three-body, for HUBO) encoder
/// with problem rotations at label creation, alternating plain and
/// reversed-adjoint generator blocks at maximal legal overlap, with the
/// RX driver layer at each inter-block single-label point.
SynthResult synth_qaoa(const QuboProblem& problem, const ConnectivityGraph& graph,
                       const Hgp& hgp, std::size_t p, const std::vector<double>& betas,
                       const std::vector<double>& alphas);

/// Second-order Trotter step of the mixed-field Ising model:
/// RX(g tau/2) layer, RZ(h tau) layer, two-body encoder with RZ(J tau) at
/// creation, closing RX(g tau/2) layer.
SynthResult synth_trotter_mfim(const QuboProblem& problem, const ConnectivityGraph& graph,
                               const Hgp& hgp, double tau,
                               const std::map<std::size_t, double>& g);

}  // namespace twine
