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

#include "twine/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace twine {

Certificate generator_check(const Circuit& circuit, const LabelState& start,
                            const std::set<Label>& target) {
  Certificate cert;
  const RunResult run = run_and_collect(circuit, start);
  cert.generated = run.collected;
  for (const auto& t : target) {
    if (!cert.generated.count(t)) cert.missing.insert(t);
  }
  // clean iff the final labels are the start labels permuted
  std::set<Label> start_set;
  for (std::size_t q = 0; q < start.size(); ++q) start_set.insert(start.z(q));
  std::set<Label> final_set;
  for (std::size_t q = 0; q < start.size(); ++q) final_set.insert(run.final_state.z(q));
  cert.clean = (start_set == final_set);
  if (cert.clean) {
    cert.permutation = run.final_state.single_label_permutation();
    if (!cert.permutation) {
      // permutation of non-single start labels: report index mapping
      std::vector<std::size_t> perm(start.size());
      for (std::size_t q = 0; q < start.size(); ++q) {
        for (std::size_t j = 0; j < start.size(); ++j) {
          if (run.final_state.z(q) == start.z(j)) {
            perm[q] = j;
            break;
          }
        }
      }
      cert.permutation = perm;
    }
  }
  return cert;
}

Certificate connectivity_check(const Circuit& circuit, const ConnectivityGraph& graph) {
  Certificate cert;
  for (std::size_t m = 0; m < circuit.depth(); ++m) {
    for (const auto& g : circuit.moment(m)) {
      if (g.is_cx() && !graph.has_edge(g.q0, g.q1)) {
        cert.connectivity_ok = false;
        cert.first_violation = {m, g};
        return cert;
      }
    }
  }
  cert.connectivity_ok = true;
  return cert;
}

std::size_t dense_unitary_cap() {
  if (const char* env = std::getenv("TWINE_MAX_DENSE_N")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 12;
}

namespace {

void apply_gate_to_columns(Matrix& u, const Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  // bit of qubit q: qubit 0 is the most significant
  auto bit_mask = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };
  switch (g.kind) {
    case GateKind::CX: {
      const std::size_t cm = bit_mask(g.q0), tm = bit_mask(g.q1);
      for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t row = 0; row < dim; ++row) {
          if ((row & cm) && !(row & tm)) {
            std::swap(u[row][col], u[row | tm][col]);
          }
        }
      }
      break;
    }
    case GateKind::RZ: {
      const std::size_t qm = bit_mask(g.q0);
      const Complex lo = std::exp(Complex(0, -g.theta));
      const Complex hi = std::exp(Complex(0, g.theta));
      for (std::size_t row = 0; row < dim; ++row) {
        const Complex f = (row & qm) ? hi : lo;
        for (std::size_t col = 0; col < dim; ++col) u[row][col] *= f;
      }
      break;
    }
    case GateKind::RX: {
      const std::size_t qm = bit_mask(g.q0);
      const double c = std::cos(g.theta);
      const Complex s = Complex(0, -std::sin(g.theta));
      for (std::size_t row = 0; row < dim; ++row) {
        if (row & qm) continue;
        const std::size_t row1 = row | qm;
        for (std::size_t col = 0; col < dim; ++col) {
          const Complex a = u[row][col], b = u[row1][col];
          u[row][col] = c * a + s * b;
          u[row1][col] = s * a + c * b;
        }
      }
      break;
    }
    case GateKind::H: {
      const std::size_t qm = bit_mask(g.q0);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::size_t row = 0; row < dim; ++row) {
        if (row & qm) continue;
        const std::size_t row1 = row | qm;
        for (std::size_t col = 0; col < dim; ++col) {
          const Complex a = u[row][col], b = u[row1][col];
          u[row][col] = inv_sqrt2 * (a + b);
          u[row1][col] = inv_sqrt2 * (a - b);
        }
      }
      break;
    }
  }
}

}  // namespace

Matrix identity_matrix(std::size_t dim) {
  Matrix m(dim, std::vector<Complex>(dim, Complex(0, 0)));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = Complex(1, 0);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t dim = a.size();
  Matrix out(dim, std::vector<Complex>(dim, Complex(0, 0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex(0, 0)) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

Matrix dense_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.n();
  if (n > dense_unitary_cap()) {
    throw std::invalid_argument("dense unitary capped at n = " +
                                std::to_string(dense_unitary_cap()));
  }
  Matrix u = identity_matrix(std::size_t{1} << n);
  for (const auto& moment : circuit.moments()) {
    for (const auto& g : moment) apply_gate_to_columns(u, g, n);
  }
  return u;
}

Matrix wire_permutation_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  const std::size_t dim = std::size_t{1} << n;
  Matrix p(dim, std::vector<Complex>(dim, Complex(0, 0)));
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t mapped = 0;
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t bit = (b >> (n - 1 - w)) & 1u;
      if (bit) mapped |= std::size_t{1} << (n - 1 - perm[w]);
    }
    p[mapped][b] = Complex(1, 0);
  }
  return p;
}

EquivResult equal_up_to_perm_phase(const Matrix& tested, const Matrix& reference,
                                   const std::vector<std::size_t>& perm, double tolerance) {
  if (tested.size() != reference.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const std::size_t dim = tested.size();
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  Matrix ref = reference;
  if (!perm.empty()) {
    ref = matmul(wire_permutation_matrix(perm), reference);
  }
  // strip global phase via the largest-magnitude entry
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double mag = std::abs(ref[i][j]);
      if (mag > best) {
        best = mag;
        bi = i;
        bj = j;
      }
    }
  }
  EquivResult result;
  if (best <= 0.0 || std::abs(tested[bi][bj]) == 0.0) {
    result.equal = false;
    result.max_error = 1.0;
    return result;
  }
  const Complex phase = tested[bi][bj] / ref[bi][bj];
  const Complex unit = phase / std::abs(phase);
  double max_err = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      max_err = std::max(max_err, std::abs(tested[i][j] - unit * ref[i][j]));
    }
  }
  result.max_error = max_err;
  result.equal = max_err <= tolerance;
  return result;
}

}  // namespace twine
