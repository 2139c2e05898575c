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

#include "twine/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twine {

namespace {

using nlohmann::json;

// fixed shortest-round-trip formatting keeps exports byte-stable
std::string format_angle(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", theta);
  return buf;
}

json gate_to_json(const Gate& g) {
  switch (g.kind) {
    case GateKind::CX: return json{{"kind", "cx"}, {"c", g.q0}, {"t", g.q1}};
    case GateKind::RZ: return json{{"kind", "rz"}, {"q", g.q0}, {"theta", g.theta}};
    case GateKind::RX: return json{{"kind", "rx"}, {"q", g.q0}, {"theta", g.theta}};
    case GateKind::H: return json{{"kind", "h"}, {"q", g.q0}};
  }
  throw std::logic_error("unknown gate kind");
}

Gate gate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cx") return Gate::cx(j.at("c").get<std::size_t>(), j.at("t").get<std::size_t>());
  if (kind == "rz") return Gate::rz(j.at("q").get<std::size_t>(), j.at("theta").get<double>());
  if (kind == "rx") return Gate::rx(j.at("q").get<std::size_t>(), j.at("theta").get<double>());
  if (kind == "h") return Gate::h(j.at("q").get<std::size_t>());
  throw std::invalid_argument("unknown gate kind: " + kind);
}

}  // namespace

std::string circuit_to_json(const Circuit& circuit) {
  json j;
  j["n"] = circuit.n();
  json moments = json::array();
  for (const auto& m : circuit.moments()) {
    json moment = json::array();
    for (const auto& g : m) moment.push_back(gate_to_json(g));
    moments.push_back(moment);
  }
  j["moments"] = moments;
  return j.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string& text) {
  const json j = json::parse(text);
  Circuit circuit(j.at("n").get<std::size_t>());
  const auto& moments = j.at("moments");
  for (std::size_t m = 0; m < moments.size(); ++m) {
    for (const auto& gj : moments[m]) circuit.place(gate_from_json(gj), m);
  }
  return circuit;
}

std::string graph_to_json(const ConnectivityGraph& graph, const std::optional<Hgp>& hgp) {
  json j;
  j["n"] = graph.n();
  json edges = json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  if (graph.family() != Family::Custom) j["family"] = family_name(graph.family());
  if (hgp) {
    json h;
    h["spine"] = hgp->spine;
    json nbrs = json::object();
    for (const auto& [s, list] : hgp->neighbors) nbrs[std::to_string(s)] = list;
    h["neighbors"] = nbrs;
    if (hgp->parallel_rails) h["parallel_rails"] = true;
    j["hgp"] = h;
  }
  return j.dump(2) + "\n";
}

GraphFile graph_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::size_t n = j.at("n").get<std::size_t>();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges")) {
    edges.insert({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
  }
  Family family = Family::Custom;
  if (j.contains("family")) {
    const std::string name = j.at("family").get<std::string>();
    for (Family f : {Family::Lnn, Family::Ladder, Family::Grid, Family::HeavyHex,
                     Family::AllToAll, Family::Custom}) {
      if (family_name(f) == name) family = f;
    }
  }
  GraphFile out{ConnectivityGraph(n, std::move(edges), family), std::nullopt};
  if (j.contains("hgp")) {
    Hgp hgp;
    for (const auto& s : j.at("hgp").at("spine")) hgp.spine.push_back(s.get<std::size_t>());
    if (j.at("hgp").contains("neighbors")) {
      for (const auto& [key, list] : j.at("hgp").at("neighbors").items()) {
        std::vector<std::size_t> nodes;
        for (const auto& u : list) nodes.push_back(u.get<std::size_t>());
        hgp.neighbors[std::stoul(key)] = nodes;
      }
    }
    hgp.parallel_rails = j.at("hgp").value("parallel_rails", false);
    out.hgp = hgp;
  }
  return out;
}

std::string problem_to_json(const ProblemFile& file) {
  json j;
  j["n"] = file.problem.n;
  json jj = json::array();
  for (const auto& [key, val] : file.problem.j) {
    jj.push_back(json::array({key.first, key.second, val}));
  }
  j["J"] = jj;
  json hh = json::array();
  for (const auto& [key, val] : file.problem.h) hh.push_back(json::array({key, val}));
  j["h"] = hh;
  json mm = json::array();
  for (const auto& [key, val] : file.problem.m) {
    mm.push_back(json::array({std::get<0>(key), std::get<1>(key), std::get<2>(key), val}));
  }
  j["M"] = mm;
  if (!file.g.empty()) {
    json gg = json::array();
    for (const auto& [key, val] : file.g) gg.push_back(json::array({key, val}));
    j["g"] = gg;
  }
  return j.dump(2) + "\n";
}

ProblemFile problem_from_json(const std::string& text) {
  const json j = json::parse(text);
  ProblemFile file;
  file.problem.n = j.at("n").get<std::size_t>();
  if (j.contains("J")) {
    for (const auto& e : j.at("J")) {
      file.problem.j[{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()}] =
          e.at(2).get<double>();
    }
  }
  if (j.contains("h")) {
    for (const auto& e : j.at("h")) {
      file.problem.h[e.at(0).get<std::size_t>()] = e.at(1).get<double>();
    }
  }
  if (j.contains("M")) {
    for (const auto& e : j.at("M")) {
      file.problem.m[{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                      e.at(2).get<std::size_t>()}] = e.at(3).get<double>();
    }
  }
  if (j.contains("g")) {
    for (const auto& e : j.at("g")) {
      file.g[e.at(0).get<std::size_t>()] = e.at(1).get<double>();
    }
  }
  file.problem.validate();
  return file;
}

std::string circuit_to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n() << "];\n";
  bool first = true;
  for (const auto& m : circuit.moments()) {
    if (!first) out << "barrier q;\n";
    first = false;
    for (const auto& g : m) {
      switch (g.kind) {
        case GateKind::CX:
          out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
          break;
        case GateKind::RZ:
          out << "rz(" << format_angle(g.theta) << ") q[" << g.q0 << "];\n";
          break;
        case GateKind::RX:
          out << "rx(" << format_angle(g.theta) << ") q[" << g.q0 << "];\n";
          break;
        case GateKind::H:
          out << "h q[" << g.q0 << "];\n";
          break;
      }
    }
  }
  return out.str();
}

namespace {

std::size_t parse_qubit(const std::string& token) {
  const auto open = token.find("q[");
  const auto close = token.find(']', open);
  if (open == std::string::npos || close == std::string::npos) {
    throw std::invalid_argument("bad qasm operand: " + token);
  }
  return std::stoul(token.substr(open + 2, close - open - 2));
}

}  // namespace

Circuit circuit_from_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Circuit circuit;
  std::size_t n = 0;
  std::size_t moment = 0;
  bool moment_used = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) {
      continue;
    }
    if (line.rfind("qreg", 0) == 0) {
      n = parse_qubit(line);
      circuit = Circuit(n);
      continue;
    }
    if (line.rfind("barrier", 0) == 0) {
      ++moment;
      moment_used = false;
      continue;
    }
    if (line.rfind("cx", 0) == 0) {
      const auto comma = line.find(',');
      circuit.place(Gate::cx(parse_qubit(line.substr(0, comma)),
                             parse_qubit(line.substr(comma + 1))),
                    moment);
      moment_used = true;
      continue;
    }
    if (line.rfind("rz", 0) == 0 || line.rfind("rx", 0) == 0) {
      const auto open = line.find('(');
      const auto close = line.find(')');
      const double theta = std::stod(line.substr(open + 1, close - open - 1));
      const std::size_t q = parse_qubit(line.substr(close + 1));
      circuit.place(line[1] == 'z' ? Gate::rz(q, theta) : Gate::rx(q, theta), moment);
      moment_used = true;
      continue;
    }
    if (line.rfind("h ", 0) == 0) {
      circuit.place(Gate::h(parse_qubit(line)), moment);
      moment_used = true;
      continue;
    }
    throw std::invalid_argument("unsupported qasm line: " + line);
  }
  (void)moment_used;
  return circuit;
}

}  // namespace twine
