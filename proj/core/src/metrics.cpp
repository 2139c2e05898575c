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

#include "twine/metrics.hpp"

#include <numeric>
#include <stdexcept>

namespace twine {

Metrics compute_metrics(const Circuit& circuit, std::size_t label_set_size) {
  if (label_set_size == 0) throw std::invalid_argument("label set size must be positive");
  Metrics m;
  m.cnot_count = circuit.cx_count();
  m.cnot_depth = circuit.cx_subcircuit().depth();
  const auto last = circuit.last_cx_touch();
  const double n = static_cast<double>(circuit.n());
  if (circuit.n() > 0) {
    m.effective_depth =
        std::accumulate(last.begin(), last.end(), 0.0,
                        [](double acc, std::size_t v) { return acc + static_cast<double>(v); }) /
        n;
  }
  m.mu_n = static_cast<double>(m.cnot_count) / static_cast<double>(label_set_size);
  m.nu_n = static_cast<double>(m.cnot_depth) * n / (2.0 * static_cast<double>(label_set_size));
  return m;
}

}  // namespace twine
