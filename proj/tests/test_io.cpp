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
#include "twine/io.hpp"
#include "twine/lnn.hpp"

using namespace twine;

TEST_CASE("circuit json round trip") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = test::random_cx_circuit(rng, 5, 15);
    c.append(Gate::rz(2, 0.125));
    c.append(Gate::rx(0, -1.75));
    c.append(Gate::h(4));
    Circuit back = circuit_from_json(circuit_to_json(c));
    CHECK(back == c);
  }
}

TEST_CASE("qasm round trip preserves moments exactly") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = test::random_cx_circuit(rng, 6, 18);
    c.append(Gate::rz(1, 0.7853981633974483));
    Circuit back = circuit_from_qasm(circuit_to_qasm(c));
    CHECK(back == c);
  }
  // gap moments survive via doubled barriers
  Circuit gap(2);
  gap.place(Gate::cx(0, 1), 0);
  gap.place(Gate::cx(1, 0), 2);
  CHECK(circuit_from_qasm(circuit_to_qasm(gap)) == gap);
}

TEST_CASE("qasm output is deterministic and carries the header") {
  auto tc = build_lnn({LnnKind::G2, 4, 2});
  const std::string a = circuit_to_qasm(tc.circuit);
  const std::string b = circuit_to_qasm(tc.circuit);
  CHECK(a == b);
  CHECK(a.find("OPENQASM 2.0;") == 0);
  CHECK(a.find("include \"qelib1.inc\";") != std::string::npos);
  CHECK(a.find("qreg q[4];") != std::string::npos);
}

TEST_CASE("graph json round trip with hgp") {
  auto g = make_grid(3, 4);
  auto hgp = builtin_hgp(g);
  auto file = graph_from_json(graph_to_json(g, hgp));
  CHECK(file.graph.n() == g.n());
  CHECK(file.graph.edges() == g.edges());
  CHECK(file.graph.family() == Family::Grid);
  REQUIRE(file.hgp.has_value());
  CHECK(file.hgp->spine == hgp.spine);
  CHECK(file.hgp->neighbors == hgp.neighbors);
}

TEST_CASE("problem json round trip") {
  ProblemFile file;
  file.problem.n = 5;
  file.problem.j[{0, 3}] = 1.5;
  file.problem.j[{1, 2}] = -0.25;
  file.problem.h[4] = 0.75;
  file.problem.m[{0, 1, 4}] = 2.0;
  file.g[2] = 0.5;
  auto back = problem_from_json(problem_to_json(file));
  CHECK(back.problem.n == 5);
  CHECK(back.problem.j == file.problem.j);
  CHECK(back.problem.h == file.problem.h);
  CHECK(back.problem.m == file.problem.m);
  CHECK(back.g == file.g);
}

TEST_CASE("malformed problems are rejected") {
  CHECK_THROWS(problem_from_json(R"({"n":3,"J":[[2,1,0.5]]})"));
  CHECK_THROWS(problem_from_json(R"({"n":3,"J":[[0,5,0.5]]})"));
}
