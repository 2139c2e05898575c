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

#include <random>

#include "test_helpers.hpp"
#include "twine/circuit.hpp"
#include "twine/label.hpp"
#include "twine/lnn.hpp"
#include "twine/metrics.hpp"

using namespace twine;

TEST_CASE("label symmetric difference is an involution") {
  Label a = Label::from_ids(8, {1, 3});
  Label b = Label::from_ids(8, {3, 5});
  Label c = a ^ b;
  CHECK(c == Label::from_ids(8, {1, 5}));
  c ^= b;
  CHECK(c == a);
  CHECK((a ^ a).empty());
}

TEST_CASE("cx acts as symmetric difference on the target label") {
  // n=2: (l1, l2) -> (l1, l1 l2)
  LabelState s = LabelState::basis(2);
  s.apply(Gate::cx(0, 1));
  CHECK(s.z(0) == Label::single(2, 0));
  CHECK(s.z(1) == Label::from_ids(2, {0, 1}));

  // involution
  LabelState t = LabelState::basis(3);
  t.apply(Gate::cx(0, 1));
  t.apply(Gate::cx(0, 1));
  CHECK(t == LabelState::basis(3));
}

TEST_CASE("cx dual action on x labels") {
  LabelState s = LabelState::basis(2, true);
  s.apply(Gate::cx(0, 1));
  CHECK(s.z(1) == Label::from_ids(2, {0, 1}));
  CHECK(s.x(0) == Label::from_ids(2, {0, 1}));
  CHECK(s.x(1) == Label::single(2, 1));
  CHECK(s.xz_dual());
}

TEST_CASE("h requires x tracking and swaps the pair") {
  LabelState z_only = LabelState::basis(2);
  CHECK_THROWS_AS(z_only.apply(Gate::h(0)), std::logic_error);
  LabelState s = LabelState::basis(2, true);
  s.apply(Gate::cx(0, 1));
  s.apply(Gate::h(1));
  CHECK(s.z(1) == Label::single(2, 1));
  CHECK(s.x(1) == Label::from_ids(2, {0, 1}));
}

TEST_CASE("gate qubits out of range are rejected") {
  LabelState s = LabelState::basis(2);
  CHECK_THROWS_AS(s.apply(Gate::cx(0, 2)), std::out_of_range);
}

TEST_CASE("run_and_collect on the twine chain") {
  // PTC(3) final state (l1 l2, l1 l3, l1); collected holds both pairs
  auto tc = build_lnn({LnnKind::Ptc, 3, 2});
  auto run = run_and_collect(tc.circuit, LabelState::basis(3));
  CHECK(run.final_state.z(0) == Label::from_ids(3, {0, 1}));
  CHECK(run.final_state.z(1) == Label::from_ids(3, {0, 2}));
  CHECK(run.final_state.z(2) == Label::single(3, 0));
  CHECK(run.collected.count(Label::from_ids(3, {0, 1})) == 1);
  CHECK(run.collected.count(Label::from_ids(3, {0, 2})) == 1);
}

TEST_CASE("run_and_collect of the empty circuit returns the start") {
  Circuit empty(4);
  auto run = run_and_collect(empty, LabelState::basis(4));
  CHECK(run.final_state == LabelState::basis(4));
  CHECK(run.collected.size() == 4);
}

TEST_CASE("ptn(3) final labels") {
  auto tc = build_lnn({LnnKind::Ptn, 3, 2});
  auto run = run_and_collect(tc.circuit, LabelState::basis(3));
  CHECK(run.final_state.z(0) == Label::from_ids(3, {1, 2}));
  CHECK(run.final_state.z(1) == Label::from_ids(3, {0, 1}));
  CHECK(run.final_state.z(2) == Label::single(3, 0));
  for (const auto& pair : all_k_body_labels(3, 2)) CHECK(run.collected.count(pair) == 1);
}

TEST_CASE("reverse maps gates through the range midpoint") {
  // CX(2,3) reversed between qubits 1 and 5 (0-based) becomes CX(5,4)
  Circuit c(7);
  c.append(Gate::cx(1, 2));
  Circuit r = reverse(c, 1, 5);
  CHECK(r.moment(0).at(0) == Gate::cx(5, 4));
  CHECK(reverse(r, 1, 5) == c);
  Circuit outside(7);
  outside.append(Gate::cx(0, 1));
  CHECK_THROWS_AS(reverse(outside, 1, 5), std::out_of_range);
}

TEST_CASE("reverse label law on random circuits") {
  // running the reversed circuit equals mirroring, running, mirroring back
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5;
    Circuit c = test::random_cx_circuit(rng, n, 30);
    Circuit rc = reverse(c, 0, n - 1);
    auto rows = test::random_basis(rng, n);
    auto mirrored = rows;
    std::reverse(mirrored.begin(), mirrored.end());
    auto lhs = run_and_collect(rc, LabelState::from_z(rows)).final_state;
    auto rhs_run = run_and_collect(c, LabelState::from_z(mirrored)).final_state;
    for (std::size_t q = 0; q < n; ++q) {
      CHECK(lhs.z(q) == rhs_run.z(n - 1 - q));
    }
  }
}

TEST_CASE("adjoint undoes a circuit") {
  auto tc = build_lnn({LnnKind::Cxc, 3, 2});
  Circuit round = concat(tc.circuit, adjoint(tc.circuit));
  std::mt19937_64 rng(3);
  auto rows = test::random_basis(rng, 3);
  auto run = run_and_collect(round, LabelState::from_z(rows));
  for (std::size_t q = 0; q < 3; ++q) CHECK(run.final_state.z(q) == rows[q]);
}

TEST_CASE("adjoint of the cnot chain makes consecutive pairs") {
  auto tc = build_lnn({LnnKind::Cxc, 5, 2});
  auto run = run_and_collect(adjoint(tc.circuit), LabelState::basis(5));
  CHECK(run.final_state.z(0) == Label::single(5, 0));
  for (std::size_t q = 1; q < 5; ++q) {
    CHECK(run.final_state.z(q) == Label::from_ids(5, {q - 1, q}));
  }
}

TEST_CASE("adjoint of a clean generator is again a generator") {
  auto g2 = build_lnn({LnnKind::G2, 5, 2});
  auto targets = all_k_body_labels(5, 2);
  auto fwd = run_and_collect(g2.circuit, LabelState::basis(5));
  auto bwd = run_and_collect(adjoint(g2.circuit), LabelState::basis(5));
  for (const auto& t : targets) {
    CHECK(fwd.collected.count(t) == 1);
    CHECK(bwd.collected.count(t) == 1);
  }
}

TEST_CASE("concat_shifted anchors and collisions") {
  Circuit a(2);
  a.append(Gate::cx(0, 1));
  a.append(Gate::cx(1, 0));
  Circuit b(2);
  b.append(Gate::cx(0, 1));

  SUBCASE("zero shift is plain concatenation") {
    Circuit c = concat_shifted(a, b, 0);
    CHECK(c.depth() == 3);
    CHECK(c.size() == 3);
  }
  SUBCASE("positive shift counts from the start of a") {
    CHECK_THROWS_AS(concat_shifted(a, b, 1), OverlapError);
    Circuit wide(3);
    wide.append(Gate::cx(0, 1));
    wide.append(Gate::cx(1, 2));
    Circuit tail(3);
    tail.append(Gate::cx(0, 1));
    Circuit c = concat_shifted(wide, tail, 2);
    CHECK(c.depth() == 3);
  }
  SUBCASE("negative shift counts from the end of a") {
    Circuit wide(4);
    wide.append(Gate::cx(0, 1));
    wide.append(Gate::cx(1, 2));
    Circuit tail(4);
    tail.append(Gate::cx(3, 2));
    Circuit c = concat_shifted(wide, tail, -1);
    CHECK(c.depth() == 2);
    CHECK(c.moment(1).size() == 2);
  }
  SUBCASE("collision reports the first conflicting moment") {
    Circuit clash(2);
    clash.append(Gate::cx(1, 0));
    try {
      concat_shifted(a, clash, -1);
      FAIL("expected an overlap");
    } catch (const OverlapError& e) {
      CHECK(e.moment == 1);
    }
  }
}

namespace {

// true when, per qubit, every gate of b lands after every gate of a
bool order_preserving(const Circuit& a, const Circuit& b, long offset) {
  std::vector<long> last_a(a.n(), -1);
  for (std::size_t m = 0; m < a.depth(); ++m) {
    for (const auto& g : a.moment(m)) {
      last_a[g.q0] = static_cast<long>(m);
      if (g.is_cx()) last_a[g.q1] = static_cast<long>(m);
    }
  }
  for (std::size_t m = 0; m < b.depth(); ++m) {
    for (const auto& g : b.moment(m)) {
      for (std::size_t q : {g.q0, g.q1}) {
        if (g.touches(q) && offset + static_cast<long>(m) <= last_a[q]) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("concat soundness: order-preserving merges act sequentially") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Circuit a = test::random_cx_circuit(rng, 6, 12, true);
    Circuit b = test::random_cx_circuit(rng, 6, 12, true);
    for (long s : {0L, -1L, -2L, -3L}) {
      Circuit merged;
      try {
        merged = concat_shifted(a, b, s);
      } catch (const OverlapError&) {
        continue;
      }
      if (!order_preserving(a, b, static_cast<long>(a.depth()) + s)) continue;
      ++checked;
      auto rows = test::random_basis(rng, 6);
      auto direct = run_and_collect(b, run_and_collect(a, LabelState::from_z(rows)).final_state);
      auto fused = run_and_collect(merged, LabelState::from_z(rows));
      for (std::size_t q = 0; q < 6; ++q) {
        CHECK(direct.final_state.z(q) == fused.final_state.z(q));
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("basis preservation over random cx circuits") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 11;  // up to 12
    Circuit c = test::random_cx_circuit(rng, n, 1 + rng() % 200);
    LabelState s = LabelState::basis(n, true);
    for (const auto& m : c.moments()) {
      for (const auto& g : m) s.apply(g);
      REQUIRE(s.z_is_basis());
    }
    CHECK(s.xz_dual());
  }
}

TEST_CASE("metrics of the twine network") {
  auto tc = build_lnn({LnnKind::Ptn, 6, 2});
  Metrics m = compute_metrics(tc.circuit, 15);  // all 2-body labels of n=6
  CHECK(m.cnot_count == 30);
  CHECK(m.cnot_depth == 18);
  CHECK(m.mu_n == doctest::Approx(2.0));
  CHECK(m.nu_n == doctest::Approx(18.0 * 6 / (2 * 15.0)));
  CHECK_THROWS_AS(compute_metrics(tc.circuit, 0), std::invalid_argument);
}

TEST_CASE("single cx generating one label has mu 1") {
  Circuit c(2);
  c.append(Gate::cx(0, 1));
  Metrics m = compute_metrics(c, 1);
  CHECK(m.mu_n == doctest::Approx(1.0));
  CHECK(m.cnot_depth == 1);
}

TEST_CASE("rotation moments do not count toward cx depth") {
  Circuit c(2);
  c.append(Gate::cx(0, 1));
  c.append(Gate::rz(0, 0.5));
  c.append(Gate::cx(1, 0));
  Metrics m = compute_metrics(c, 1);
  CHECK(m.cnot_depth == 2);
  CHECK(m.effective_depth == doctest::Approx(2.0));
}

TEST_CASE("empty interior moments count toward the span") {
  Circuit c(2);
  c.place(Gate::cx(0, 1), 0);
  c.place(Gate::cx(1, 0), 2);
  CHECK(c.cx_subcircuit().depth() == 3);
}

TEST_CASE("asap repack preserves per-qubit order and label action") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Circuit c = test::random_cx_circuit(rng, 6, 25);
    Circuit packed = repack_asap(c);
    CHECK(packed.size() == c.size());
    CHECK(packed.depth() <= c.depth());
    auto rows = test::random_basis(rng, 6);
    auto lhs = run_and_collect(c, LabelState::from_z(rows)).final_state;
    auto rhs = run_and_collect(packed, LabelState::from_z(rows)).final_state;
    for (std::size_t q = 0; q < 6; ++q) CHECK(lhs.z(q) == rhs.z(q));
  }
}
