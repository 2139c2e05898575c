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
#include "twine/graph_gen.hpp"
#include "twine/verify.hpp"

using namespace twine;

namespace {

void check_two_body_generator(const ConnectivityGraph& graph, const Circuit& circuit,
                              bool expect_clean) {
  auto cert = generator_check(circuit, LabelState::basis(graph.n()),
                              all_k_body_labels(graph.n(), 2));
  CAPTURE(graph.n());
  CHECK(cert.missing.empty());
  if (expect_clean) {
    CHECK(cert.clean);
    CHECK(cert.permutation.has_value());
  }
  CHECK(connectivity_check(circuit, graph).connectivity_ok);
}

}  // namespace

TEST_CASE("all-to-all compression halves the twine network exactly") {
  for (std::size_t n = 2; n <= 40; ++n) {
    auto tagged = build_lnn({LnnKind::Ptn, n, 2});
    auto compressed = compress_all_to_all(tagged);
    CAPTURE(n);
    CHECK(compressed.circuit.size() == n * (n - 1) / 2);
    CHECK(compressed.circuit.depth() == 2 * n - 3);
    // coverage identical to the uncompressed network
    auto cert = generator_check(compressed.circuit, LabelState::basis(n),
                                all_k_body_labels(n, 2));
    CHECK(cert.missing.empty());
  }
}

TEST_CASE("compression preserves the generated label set") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (LnnKind kind : {LnnKind::Ptn, LnnKind::G2, LnnKind::G3}) {
      if (kind == LnnKind::G3 && n < 3) continue;
      auto tagged = build_lnn({kind, n, 2});
      auto plain = run_and_collect(tagged.circuit, LabelState::basis(n));
      auto compressed = compress_all_to_all(tagged);
      auto comp = run_and_collect(compressed.circuit, LabelState::basis(n));
      CAPTURE(lnn_kind_name(kind));
      CAPTURE(n);
      for (const auto& l : plain.collected) CHECK(comp.collected.count(l) == 1);
      // final label multiset matches under the returned wire permutation
      for (std::size_t wire = 0; wire < n; ++wire) {
        CHECK(comp.final_state.z(compressed.vperm.perm[wire]) == plain.final_state.z(wire));
      }
    }
  }
}

TEST_CASE("compressed ptn(4) is the all-to-all staircase") {
  auto compressed = compress_all_to_all(build_lnn({LnnKind::Ptn, 4, 2}));
  const Circuit& c = compressed.circuit;
  REQUIRE(c.depth() == 5);
  CHECK(c.moment(0).at(0) == Gate::cx(0, 1));
  CHECK(c.moment(1).at(0) == Gate::cx(0, 2));
  REQUIRE(c.moment(2).size() == 2);
  CHECK(c.moment(4).at(0) == Gate::cx(2, 3));
  CHECK(c.size() == 6);
}

TEST_CASE("compressing a swap-free plain circuit is the identity transform") {
  std::mt19937_64 rng(3);
  Circuit c = test::random_cx_circuit(rng, 5, 12);
  auto res = compress_all_to_all(c);
  CHECK(res.circuit == c);
  // a literal swap pattern is rejected without tags
  Circuit swapful(3);
  swapful.append(Gate::cx(0, 1));
  swapful.append(Gate::cx(1, 0));
  swapful.append(Gate::cx(0, 1));
  CHECK_THROWS_AS(compress_all_to_all(swapful), std::invalid_argument);
}

TEST_CASE("graph twine chain reaches every qubit") {
  SUBCASE("grid(3,3) from the spine head") {
    auto g = make_grid(3, 3);
    auto hgp = builtin_hgp(g);
    Circuit c = ptc_graph(g, hgp, hgp.spine.front());
    CHECK(c.size() == 10);  // 4n/3 - 2 for one pass over nine qubits
    CHECK(connectivity_check(c, g).connectivity_ok);
    auto run = run_and_collect(c, LabelState::basis(9));
    const std::size_t start = hgp.spine.front();
    std::size_t holding = 0;
    for (const auto& t : all_k_body_labels(9, 2)) {
      if (t.test(start)) CHECK(run.collected.count(t) == 1);
    }
    for (std::size_t q = 0; q < 9; ++q) {
      if (run.final_state.z(q) == Label::single(9, start)) ++holding;
    }
    CHECK(holding == 1);
  }
  SUBCASE("lnn-shaped hgp reduces to the chain plus boundary gates") {
    auto g = make_lnn(7);
    auto hgp = builtin_hgp(g);
    Circuit c = ptc_graph(g, hgp, hgp.spine.front());
    auto plain = build_lnn({LnnKind::Ptc, 7, 2});
    // same pair coverage relative to each start label
    auto run = run_and_collect(c, LabelState::basis(7));
    const std::size_t start = hgp.spine.front();
    for (const auto& t : all_k_body_labels(7, 2)) {
      CHECK(run.collected.count(t) == (t.test(start) ? 1 : 0));
    }
    CHECK(c.size() == plain.circuit.size() + 2);
  }
  SUBCASE("exact pass sizes per grid width are stable") {
    for (std::size_t c = 2; c <= 12; ++c) {
      auto g = make_grid(3, c);
      Circuit pass = ptc_graph(g, builtin_hgp(g), builtin_hgp(g).spine.front());
      CHECK(pass.size() == 4 * c - 2);  // 4n/3 + O(sqrt n) with n = 3c
    }
  }
}

TEST_CASE("grid two-body generator: coverage, connectivity, exact count") {
  for (std::size_t cols = 2; cols <= 12; ++cols) {
    auto g = make_grid(3, cols);
    auto hgp = builtin_hgp(g);
    const std::size_t n = g.n();
    Circuit ptn = ptn_graph(g, hgp);
    auto cert = generator_check(ptn, LabelState::basis(n), all_k_body_labels(n, 2));
    CAPTURE(cols);
    CHECK(cert.missing.empty());
    CHECK(connectivity_check(ptn, g).connectivity_ok);

    Circuit clean = g2_graph(g, hgp);
    check_two_body_generator(g, clean, true);
    // 2/3 n^2 + 2/3 n with a fixed additive constant
    const long predicted = (2 * static_cast<long>(n) * static_cast<long>(n) +
                            2 * static_cast<long>(n)) / 3 - 2;
    CHECK(static_cast<long>(clean.size()) == predicted);
  }
}

TEST_CASE("general grids stay certified") {
  for (auto [r, c] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 5}, {4, 3}, {5, 3}, {6, 3}, {7, 2}}) {
    auto g = make_grid(r, c);
    auto hgp = builtin_hgp(g);
    CAPTURE(r);
    CAPTURE(c);
    Circuit clean = g2_graph(g, hgp);
    check_two_body_generator(g, clean, true);
  }
}

TEST_CASE("heavy-hex strips stay certified up to thirty qubits") {
  for (std::size_t cells = 1; cells <= 10; ++cells) {
    auto g = make_heavy_hex(cells);
    auto hgp = builtin_hgp(g);
    CAPTURE(cells);
    Circuit clean = g2_graph(g, hgp);
    check_two_body_generator(g, clean, true);
    // leading coefficient 5/6 from five gates per three labels
    const double n = static_cast<double>(g.n());
    if (g.n() >= 12) {
      CHECK(static_cast<double>(ptn_graph(g, hgp).size()) ==
            doctest::Approx(5.0 / 6.0 * n * n).epsilon(0.15));
    }
  }
}

TEST_CASE("ladders stay certified up to forty qubits") {
  std::vector<std::size_t> depths;
  for (std::size_t n = 4; n <= 40; n += 2) {
    auto g = make_ladder(n);
    auto hgp = builtin_hgp(g);
    CAPTURE(n);
    Circuit ptn = ptn_graph(g, hgp);
    auto cert = generator_check(ptn, LabelState::basis(n), all_k_body_labels(n, 2));
    CHECK(cert.missing.empty());
    CHECK(connectivity_check(ptn, g).connectivity_ok);
    Circuit clean = g2_graph(g, hgp);
    check_two_body_generator(g, clean, true);
    depths.push_back(ptn.cx_subcircuit().depth());
    // count: 3/4 n^2 + O(n)
    const double nd = static_cast<double>(n);
    if (n >= 12) {
      CHECK(static_cast<double>(ptn.size()) ==
            doctest::Approx(0.75 * nd * nd).epsilon(0.2));
    }
  }
  // depth 3n + c0 with one recorded constant across the range
  for (std::size_t i = 0; i + 1 < depths.size(); ++i) {
    const long n0 = 4 + 2 * static_cast<long>(i);
    const long c0 = static_cast<long>(depths[i]) - 3 * n0;
    const long c1 = static_cast<long>(depths[i + 1]) - 3 * (n0 + 2);
    if (n0 >= 8) CHECK(c0 == c1);
  }
}

TEST_CASE("initializer encodes the special label everywhere") {
  for (auto family : {0, 1, 2}) {
    ConnectivityGraph g = family == 0   ? make_grid(3, 4)
                          : family == 1 ? make_heavy_hex(3)
                                        : make_lnn(8);
    auto hgp = builtin_hgp(g);
    const std::size_t special = hgp.neighbors_of(hgp.spine.front()).at(0);
    Circuit init = initializer(g, hgp, special);
    CHECK(connectivity_check(init, g).connectivity_ok);
    auto run = run_and_collect(init, LabelState::basis(g.n()));
    CHECK(run.final_state.z(special) == Label::single(g.n(), special));
    for (std::size_t q = 0; q < g.n(); ++q) {
      if (q == special) continue;
      CHECK(run.final_state.z(q).test(special));
      CHECK(run.final_state.z(q).weight() == 2);
    }
    // O(n) gates
    CHECK(init.size() <= 2 * g.n());
  }
  SUBCASE("two qubits degenerate to one gate") {
    auto g = make_lnn(2);
    auto hgp = builtin_hgp(g);
    Circuit init = initializer(g, hgp, 1);
    CHECK(init.size() == 1);
  }
}

TEST_CASE("graph three-body generators cover all triples") {
  SUBCASE("grid(3,4) covers all C(12,3)") {
    auto g = make_grid(3, 4);
    Circuit c = g3_graph(g, builtin_hgp(g));
    CHECK(connectivity_check(c, g).connectivity_ok);
    auto cert = generator_check(c, LabelState::basis(12), all_k_body_labels(12, 3));
    CHECK(cert.missing.empty());
  }
  SUBCASE("heavy-hex and lnn") {
    for (int which : {0, 1}) {
      ConnectivityGraph g = which == 0 ? make_heavy_hex(3) : make_lnn(9);
      Circuit c = g3_graph(g, builtin_hgp(g));
      CAPTURE(which);
      CHECK(connectivity_check(c, g).connectivity_ok);
      auto cert =
          generator_check(c, LabelState::basis(g.n()), all_k_body_labels(g.n(), 3));
      CHECK(cert.missing.empty());
    }
  }
  SUBCASE("grid count tends to four thirds per label") {
    auto g = make_grid(3, 10);
    Circuit c = g3_graph(g, builtin_hgp(g));
    const double n = 30.0;
    const double labels = n * (n - 1) * (n - 2) / 6.0;
    const double mu = static_cast<double>(c.cx_count()) / labels;
    CHECK(mu < 1.75);
    CHECK(mu >= 4.0 / 3.0);
  }
}

TEST_CASE("unsupported three-body families are rejected") {
  auto g = make_ladder(8);
  CHECK_THROWS_AS(g3_graph(g, builtin_hgp(g)), std::invalid_argument);
}
