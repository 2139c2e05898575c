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

#include "twine/circuit.hpp"

namespace twine {

/// Count/depth metrics of the CX sub-circuit. Single-qubit gates ride in
/// their own moments and are excluded throughout.
struct Metrics {
  std::size_t cnot_count = 0;
  std::size_t cnot_depth = 0;     // moments of the CX sub-circuit
  double effective_depth = 0.0;   // mean last CX moment per qubit
  double mu_n = 0.0;              // cnot_count / |labels|
  double nu_n = 0.0;              // cnot_depth * n / (2 |labels|)
};

/// label_set_size must be positive.
Metrics compute_metrics(const Circuit& circuit, std::size_t label_set_size);

}  // namespace twine
