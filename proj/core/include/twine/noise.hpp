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

#include <string>
#include <vector>

#include "twine/metrics.hpp"

namespace twine {

/// Two-parameter noise model: a two-qubit gate fidelity and a per-moment
/// idling fidelity. Physical devices satisfy f_2q < f_idle^2.
struct NoiseParams {
  double f_2q = 1.0;
  double f_idle = 1.0;

  bool physical() const { return f_2q <= f_idle * f_idle; }
};

/// F_2q^|C| * F_idle^(n D - 2 |C|), with D the CX depth. Every qubit-moment
/// is either half of a two-qubit gate or an idle slot; single-qubit gates
/// are excluded from the model.
double circuit_fidelity(std::size_t cnot_count, double depth, std::size_t n,
                        const NoiseParams& params);
double circuit_fidelity(const Metrics& metrics, std::size_t n, const NoiseParams& params,
                        bool use_effective_depth = false);

/// F_idle = 1/2 + (2 exp(-Tg/T2) + exp(-Tg/T1)) / 6.
double idle_fidelity(double t1, double t2, double tg);

/// Closed-form count and effective depth of the clean two-body generator
/// per locally-connected layout, used by the design ranking.
struct DesignCurve {
  std::string name;
  double count;
  double eff_depth;
};
std::vector<DesignCurve> design_curves(std::size_t n);

struct DesignRanking {
  std::vector<std::pair<std::string, double>> fidelity;  // sorted best first
  /// Pairwise crossover exponents x with f_2q = f_idle^x where the two
  /// designs tie, when one exists.
  std::vector<std::tuple<std::string, std::string, double>> crossovers;
};
DesignRanking best_design(std::size_t n, const NoiseParams& params);

/// Crossover exponent between ladder and square grid as a function of n,
/// solved from the fidelity-ratio equation; tends to 19 for large n.
double ladder_grid_crossover_exponent(std::size_t n);

/// Process fidelity from m >= 2 correct-bitstring probabilities:
/// m/(m-1) [mean of sqrt(P)]^2 - mean of P / (m-1).
double process_fidelity(const std::vector<double>& probs);

}  // namespace twine
