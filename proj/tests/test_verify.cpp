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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "test_helpers.hpp"
#include "twine/lnn.hpp"
#include "twine/topology.hpp"
#include "twine/verify.hpp"

using namespace twine;

namespace {
constexpr double kPi = 3.14159265358979323846;

Matrix dagger(const Matrix& u) {
  const std::size_t dim = u.size();
  Matrix out(dim, std::vector<Complex>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out[i][j] = std::conj(u[j][i]);
  }
  return out;
}

std::vector<std::size_t> iota_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

TEST_CASE("generator_check on the twine network and chain") {
  auto ptn = build_lnn({LnnKind::Ptn, 6, 2});
  auto cert = generator_check(ptn.circuit, LabelState::basis(6), all_k_body_labels(6, 2));
  CHECK(cert.missing.empty());

  auto ptc = build_lnn({LnnKind::Ptc, 6, 2});
  auto cert2 = generator_check(ptc.circuit, LabelState::basis(6), all_k_body_labels(6, 2));
  for (const auto& l : cert2.missing) CHECK(!l.test(0));
  CHECK(cert2.missing.size() == 10);  // pairs avoiding the start label

  Circuit empty(4);
  auto cert3 = generator_check(empty, LabelState::basis(4), all_k_body_labels(4, 2));
  CHECK(cert3.missing == all_k_body_labels(4, 2));
  CHECK(cert3.clean);
}

TEST_CASE("generator_check reports the clean permutation") {
  auto g2 = build_lnn({LnnKind::G2, 5, 2});
  auto cert = generator_check(g2.circuit, LabelState::basis(5), all_k_body_labels(5, 2));
  CHECK(cert.missing.empty());
  CHECK(cert.clean);
  REQUIRE(cert.permutation.has_value());
  for (std::size_t q = 0; q < 5; ++q) CHECK((*cert.permutation)[q] == 4 - q);
}

TEST_CASE("connectivity_check flags the first non-edge cx") {
  auto g2 = build_lnn({LnnKind::G2, 4, 2});
  CHECK(connectivity_check(g2.circuit, make_lnn(4)).connectivity_ok);
  // drop edge (1,2)
  ConnectivityGraph broken(4, {{0, 1}, {2, 3}, {0, 3}}, Family::Custom);
  auto cert = connectivity_check(g2.circuit, broken);
  CHECK(!cert.connectivity_ok);
  REQUIRE(cert.first_violation.has_value());
  const auto& [moment, gate] = *cert.first_violation;
  CHECK(((gate.q0 == 1 && gate.q1 == 2) || (gate.q0 == 2 && gate.q1 == 1)));
  CHECK(connectivity_check(g2.circuit, make_all_to_all(4)).connectivity_ok);
}

TEST_CASE("dense unitary of a single cx") {
  Circuit c(2);
  c.append(Gate::cx(0, 1));
  Matrix u = dense_unitary(c);
  // |10> <-> |11> swapped, |00>, |01> fixed
  Matrix want = identity_matrix(4);
  std::swap(want[2], want[3]);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(u[i][j] - want[i][j]) < 1e-12);
    }
  }
}

TEST_CASE("circuit times adjoint is the identity") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = test::random_cx_circuit(rng, 4, 20);
    c.append(Gate::rz(1, 0.37));
    c.append(Gate::rx(2, -0.81));
    Matrix u = dense_unitary(concat(c, adjoint(c)));
    Matrix id = identity_matrix(16);
    for (std::size_t i = 0; i < 16; ++i) {
      for (std::size_t j = 0; j < 16; ++j) {
        CHECK(std::abs(u[i][j] - id[i][j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("rz at an encoded pair equals the two-body rotation") {
  // G2(3) with RZ(a) inserted where l1l2 appears equals exp(-ia Z1 Z2) up
  // to the output permutation
  const double alpha = 0.731;
  auto g2 = build_lnn({LnnKind::G2, 3, 2});
  // find the first moment where some qubit carries {0,1}
  LabelState s = LabelState::basis(3);
  const Label target = Label::from_ids(3, {0, 1});
  Circuit with_rz(3);
  bool inserted = false;
  std::size_t next = 0;
  for (std::size_t m = 0; m < g2.circuit.depth(); ++m) {
    for (const auto& g : g2.circuit.moment(m)) with_rz.place(g, next);
    ++next;
    for (const auto& g : g2.circuit.moment(m)) s.apply(g);
    if (!inserted) {
      for (std::size_t q = 0; q < 3; ++q) {
        if (s.z(q) == target) {
          with_rz.place(Gate::rz(q, alpha), next);
          ++next;
          inserted = true;
          break;
        }
      }
    }
  }
  REQUIRE(inserted);
  Matrix u = dense_unitary(with_rz);
  // oracle: permutation from the clean check times exp(-ia Z0 Z1)
  Matrix zz = identity_matrix(8);
  for (std::size_t b = 0; b < 8; ++b) {
    const int z0 = (b & 4) ? -1 : 1;
    const int z1 = (b & 2) ? -1 : 1;
    zz[b][b] = std::exp(Complex(0, -alpha * z0 * z1));
  }
  auto cert = generator_check(g2.circuit, LabelState::basis(3), {});
  REQUIRE(cert.permutation.has_value());
  auto res = equal_up_to_perm_phase(u, zz, *cert.permutation);
  CHECK(res.equal);
}

TEST_CASE("equal_up_to_perm_phase basics") {
  Matrix u = identity_matrix(4);
  auto r = equal_up_to_perm_phase(u, u, iota_perm(2));
  CHECK(r.equal);
  CHECK(r.max_error == doctest::Approx(0.0));

  Matrix v = u;
  for (auto& row : v) {
    for (auto& x : row) x *= std::exp(Complex(0, 1.234));
  }
  CHECK(equal_up_to_perm_phase(v, u, iota_perm(2)).equal);

  Matrix w = identity_matrix(8);
  CHECK_THROWS_AS(equal_up_to_perm_phase(u, w, iota_perm(2)), std::invalid_argument);
}

TEST_CASE("wire permutation matrix relabels basis states") {
  // swap wires 0 and 1 on two qubits: |01> -> |10>
  Matrix p = wire_permutation_matrix({1, 0});
  CHECK(std::abs(p[2][1] - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(p[1][2] - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(p[0][0] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("label tracking predicts the diagonal phase of cx+rz circuits") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 5;  // up to 6
    Circuit c = test::random_cx_circuit(rng, n, 10);
    // sprinkle rotations and track where they land
    LabelState s = LabelState::basis(n);
    std::vector<std::pair<Label, double>> rotations;
    Circuit with_rz(n);
    std::uniform_real_distribution<double> angle(-1.5, 1.5);
    for (std::size_t m = 0; m < c.depth(); ++m) {
      const std::size_t target = with_rz.depth();
      for (const auto& g : c.moment(m)) with_rz.place(g, target);
      for (const auto& g : c.moment(m)) s.apply(g);
      if ((rng() & 3) == 0) {
        const std::size_t q = rng() % n;
        const double a = angle(rng);
        with_rz.append(Gate::rz(q, a));
        rotations.emplace_back(s.z(q), a);
      }
    }
    // the final unitary is P * diag(phases); compare diagonal phases on
    // each basis state
    Matrix u = dense_unitary(with_rz);
    const std::size_t dim = std::size_t{1} << n;
    auto fin = run_and_collect(with_rz, LabelState::basis(n)).final_state;
    for (std::size_t b = 0; b < dim; ++b) {
      // predicted phase: product over rotations of exp(-i a z(label))
      Complex phase(1, 0);
      for (const auto& [label, a] : rotations) {
        int z = 1;
        for (auto id : label.ids()) {
          if (b & (std::size_t{1} << (n - 1 - id))) z = -z;
        }
        phase *= std::exp(Complex(0, -a * static_cast<double>(z)));
      }
      // the row holding this column's amplitude: bit id b maps through the
      // final label permutation
      std::size_t row = 0;
      for (std::size_t q = 0; q < n; ++q) {
        const auto& label = fin.z(q);
        REQUIRE(label.weight() == 1);
        const std::size_t logical = label.ids()[0];
        if (b & (std::size_t{1} << (n - 1 - logical))) row |= std::size_t{1} << (n - 1 - q);
      }
      CHECK(std::abs(u[row][b] - phase) < 1e-9);
    }
  }
}

TEST_CASE("dense unitary cap") {
  Circuit big(13);
  big.append(Gate::cx(0, 1));
  CHECK_THROWS_AS(dense_unitary(big), std::invalid_argument);
  CHECK(dense_unitary_cap() == 12);
}

TEST_CASE("dagger helper sanity") {
  Circuit c(2);
  c.append(Gate::rx(0, 0.3));
  Matrix u = dense_unitary(c);
  Matrix prod = matmul(u, dagger(u));
  Matrix id = identity_matrix(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(prod[i][j] - id[i][j]) < 1e-12);
  }
}
