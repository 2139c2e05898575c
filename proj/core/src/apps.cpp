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

#include "twine/apps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "ptn_engine.hpp"

namespace twine {

namespace {
constexpr std::size_t npos = engine::npos;
constexpr double kPi = 3.14159265358979323846;

std::size_t find_z_single(const LabelState& state, std::size_t logical) {
  for (std::size_t q = 0; q < state.size(); ++q) {
    if (state.z(q).weight() == 1 && state.z(q).test(logical)) return q;
  }
  throw std::logic_error("no qubit carries the requested single z label");
}

std::size_t find_x_single(const LabelState& state, std::size_t logical) {
  for (std::size_t q = 0; q < state.size(); ++q) {
    if (state.x(q).weight() == 1 && state.x(q).test(logical)) return q;
  }
  throw std::logic_error("no qubit carries the requested single x label");
}

}  // namespace

void QuboProblem::validate() const {
  for (const auto& [key, val] : j) {
    (void)val;
    if (!(key.first < key.second) || key.second >= n) {
      throw std::invalid_argument("two-body coupling indices must satisfy j < k < n");
    }
  }
  for (const auto& [key, val] : h) {
    (void)val;
    if (key >= n) throw std::invalid_argument("field index out of range");
  }
  for (const auto& [key, val] : m) {
    (void)val;
    const auto [l, jj, k] = key;
    if (!(l < jj && jj < k) || k >= n) {
      throw std::invalid_argument("three-body indices must satisfy l < j < k < n");
    }
  }
}

bool replay_schedule(const Circuit& circuit, const RotationSchedule& schedule) {
  // tracking over the CX skeleton only; records hold the labels seen there
  LabelState state = LabelState::basis(circuit.n(), true);
  std::size_t next = 0;
  RotationSchedule sorted = schedule;
  std::sort(sorted.begin(), sorted.end(),
            [](const RotationRecord& a, const RotationRecord& b) { return a.moment < b.moment; });
  for (std::size_t m = 0; m < circuit.depth(); ++m) {
    while (next < sorted.size() && sorted[next].moment == m) {
      const auto& r = sorted[next];
      const Label& carried = r.axis == GateKind::RX ? state.x(r.qubit) : state.z(r.qubit);
      if (carried != r.label) return false;
      ++next;
    }
    for (const auto& g : circuit.moment(m)) {
      if (g.is_cx()) state.apply(g);
    }
  }
  return next == sorted.size();
}

namespace {

/// Builder wrapper shared by the synthesizers: forwards to an AsapBuilder,
/// tracks the CX-skeleton labels, records rotations into the schedule and
/// fires a callback after every CX so term rotations land at creation.
class TrackedBuilder {
 public:
  explicit TrackedBuilder(std::size_t n)
      : builder_(n), state_(LabelState::basis(n, true)) {}

  void add_cx(std::size_t c, std::size_t t) {
    builder_.add_cx(c, t);
    state_.apply(Gate::cx(c, t));
    if (on_cx) on_cx(c, t);
  }
  void add_dx(std::size_t c, std::size_t t) {
    add_cx(t, c);
    add_cx(c, t);
  }
  void add_sw(std::size_t c, std::size_t t) {
    add_cx(c, t);
    add_cx(t, c);
    add_cx(c, t);
  }
  void add(const Gate& g) {
    if (g.is_cx()) {
      add_cx(g.q0, g.q1);
    } else {
      builder_.add(g);
    }
  }

  void add_rz(std::size_t q, double theta) {
    const std::size_t m = builder_.add(Gate::rz(q, theta));
    schedule.push_back({m, q, state_.z(q), theta, GateKind::RZ});
  }
  void add_rx(std::size_t q, double theta) {
    const std::size_t m = builder_.add(Gate::rx(q, theta));
    schedule.push_back({m, q, state_.x(q), theta, GateKind::RX});
  }

  const LabelState& state() const { return state_; }
  Circuit take() { return std::move(builder_).take(); }

  std::function<void(std::size_t, std::size_t)> on_cx;
  RotationSchedule schedule;

 private:
  AsapBuilder builder_;
  LabelState state_;
};

// ---------------------------------------------------------------------------
// QFT

struct QftEntry {
  bool is_dx = false;
  std::size_t c = 0, t = 0;
  bool creation = false;
  std::size_t pair_a = 0, pair_b = 0;  // logical ids of the created pair
};

struct QftRecord {
  std::vector<QftEntry> entries;
  struct HSite {
    std::size_t entry_index;  // sandwich goes before this entry
    std::size_t qubit;        // wire in the recording frame
    std::size_t logical;
  };
  std::vector<HSite> h_sites;
  std::vector<std::size_t> sigma_order;  // logical ids in release order
  std::vector<std::size_t> out_perm;     // wire -> logical, recording frame
};

/// Recording pass over the CX skeleton: collects the gate stream, the pair
/// creations and the per-pass Hadamard sites.
class QftRecorder {
 public:
  explicit QftRecorder(std::size_t n) : n_(n), state_(LabelState::basis(n, true)) {
    for (std::size_t q = 0; q < n; ++q) seen_.insert(state_.z(q));
  }

  void add_cx(std::size_t c, std::size_t t) {
    QftEntry e{false, c, t};
    apply_and_tag(e, c, t);
    rec.entries.push_back(e);
  }
  void add_dx(std::size_t c, std::size_t t) {
    QftEntry e{true, c, t};
    apply_and_tag(e, t, c);  // the pair lands on the first sub-gate's target
    state_.apply(Gate::cx(c, t));
    seen_.insert(state_.z(t));
    rec.entries.push_back(e);
  }
  void add_sw(std::size_t c, std::size_t t) {
    add_cx(c, t);
    add_cx(t, c);
    add_cx(c, t);
  }
  void add(const Gate& g) {
    if (!g.is_cx()) throw std::logic_error("recorder only handles CX gates");
    add_cx(g.q0, g.q1);
  }

  bool in_pass = false;
  QftRecord rec;
  const LabelState& state() const { return state_; }

 private:
  void apply_and_tag(QftEntry& e, std::size_t c, std::size_t t) {
    state_.apply(Gate::cx(c, t));
    const Label& landed = state_.z(t);
    if (in_pass && landed.weight() == 2 && !seen_.count(landed)) {
      e.creation = true;
      const auto ids = landed.ids();
      e.pair_a = ids[0];
      e.pair_b = ids[1];
    }
    seen_.insert(landed);
  }

  std::size_t n_;
  LabelState state_;
  std::set<Label> seen_;
};

QftRecord record_qft(const ConnectivityGraph& graph, const Hgp& hgp) {
  const std::size_t n = graph.n();
  const engine::PtnPlan plan = engine::make_ptn_plan(graph, hgp);
  QftRecorder recorder(n);
  std::vector<bool> active(n, true);
  Label released(n);  // prefix of retired labels; stays a single
  std::vector<bool> is_released(n, false);
  for (const auto& pass : plan.passes) {
    const std::size_t carrier = pass.travel.front();
    Label sigma = released;
    sigma ^= recorder.state().z(carrier);
    if (sigma.weight() != 1) throw std::logic_error("carrier label is not one single ahead");
    const std::size_t logical = sigma.ids()[0];
    const std::size_t site = find_x_single(recorder.state(), logical);
    recorder.rec.h_sites.push_back({recorder.rec.entries.size(), site, logical});
    recorder.rec.sigma_order.push_back(logical);
    is_released[logical] = true;
    released = sigma;
    recorder.in_pass = true;
    engine::emit_pass(recorder, graph, active, pass);
    recorder.in_pass = false;
  }
  engine::emit_decode(recorder, graph, plan);
  std::size_t last_logical = npos;
  for (std::size_t l = 0; l < n; ++l) {
    if (!is_released[l]) {
      if (last_logical != npos) throw std::logic_error("more than one unreleased logical qubit");
      last_logical = l;
    }
  }
  const std::size_t site = find_x_single(recorder.state(), last_logical);
  recorder.rec.h_sites.push_back({recorder.rec.entries.size(), site, last_logical});
  recorder.rec.sigma_order.push_back(last_logical);
  auto perm = recorder.state().single_label_permutation();
  if (!perm) throw std::logic_error("decoded state is not a permutation of singles");
  recorder.rec.out_perm = *perm;
  // every pair must have been created exactly once
  std::size_t creations = 0;
  for (const auto& e : recorder.rec.entries) creations += e.creation ? 1 : 0;
  if (creations != n * (n - 1) / 2) {
    throw std::logic_error("pass creations do not cover every pair");
  }
  return recorder.rec;
}

/// Replays a QFT record into gates. When `vperm` is set the stream is
/// rewritten for an all-to-all device: DCNOTs become one CX plus a
/// virtual swap. `keep` masks dropped approximate-QFT entries.
SynthResult emit_qft(std::size_t n, const QftRecord& rec, bool all_to_all,
                     const std::vector<bool>& keep) {
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[rec.sigma_order[r]] = r;

  // per-pair keep flags for the single-qubit angle budgets
  std::vector<std::vector<bool>> pair_kept(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < rec.entries.size(); ++i) {
    const auto& e = rec.entries[i];
    if (e.creation && keep[i]) {
      pair_kept[e.pair_a][e.pair_b] = pair_kept[e.pair_b][e.pair_a] = true;
    }
  }
  auto cp_angle = [&](std::size_t a, std::size_t b) {
    const std::size_t d =
        rank[a] > rank[b] ? rank[a] - rank[b] : rank[b] - rank[a];
    return kPi / std::pow(2.0, static_cast<double>(d));
  };

  TrackedBuilder out(n);
  VirtualPermutation vperm = VirtualPermutation::identity(n);
  auto dev = [&](std::size_t wire) { return all_to_all ? vperm.perm[wire] : wire; };

  // single-z pieces that precede the Hadamard of their later-ranked qubit
  for (std::size_t w = 0; w < n; ++w) {
    double theta = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (pair_kept[w][v] && rank[v] < rank[w]) theta += cp_angle(w, v) / 4.0;
    }
    if (theta != 0.0) out.add_rz(w, theta);
  }

  std::size_t h_next = 0;
  for (std::size_t i = 0; i <= rec.entries.size(); ++i) {
    while (h_next < rec.h_sites.size() && rec.h_sites[h_next].entry_index == i) {
      const auto& site = rec.h_sites[h_next];
      const std::size_t q = dev(site.qubit);
      // single-z pieces that follow this Hadamard, commuted through it
      double theta = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        if (pair_kept[site.logical][v] && rank[v] > rank[site.logical]) {
          theta += cp_angle(site.logical, v) / 4.0;
        }
      }
      if (theta != 0.0) out.add_rx(q, theta);
      out.add_rz(q, kPi / 4.0);
      out.add_rx(q, kPi / 4.0);
      out.add_rz(q, kPi / 4.0);
      ++h_next;
    }
    if (i == rec.entries.size()) break;
    const auto& e = rec.entries[i];
    if (all_to_all) {
      if (keep[i]) out.add_cx(dev(e.c), dev(e.t));
      if (e.is_dx) vperm.swap_wires(e.c, e.t);
      if (e.creation && keep[i]) {
        // the pair lands on the emitted target
        out.add_rz(e.is_dx ? vperm.perm[e.c] : dev(e.t), -cp_angle(e.pair_a, e.pair_b) / 4.0);
      }
    } else {
      if (e.is_dx) {
        out.add_cx(e.t, e.c);
        if (e.creation) out.add_rz(e.c, -cp_angle(e.pair_a, e.pair_b) / 4.0);
        out.add_cx(e.c, e.t);
      } else {
        out.add_cx(e.c, e.t);
        if (e.creation) out.add_rz(e.t, -cp_angle(e.pair_a, e.pair_b) / 4.0);
      }
    }
  }

  SynthResult result;
  result.schedule = std::move(out.schedule);
  result.bit_order = rec.sigma_order;
  // final wire permutation of the emitted circuit
  auto perm = out.state().single_label_permutation();
  result.circuit = out.take();
  if (perm) {
    result.out_perm = *perm;
  } else {
    result.out_perm.clear();  // approximate circuits need not end in singles
  }
  return result;
}

}  // namespace

SynthResult synth_qft(const ConnectivityGraph& graph, const Hgp& hgp) {
  const std::size_t n = graph.n();
  if (n < 2) throw std::invalid_argument("qft needs n >= 2");
  const bool a2a = graph.family() == Family::AllToAll;
  ConnectivityGraph base = a2a ? make_lnn(n) : graph;
  Hgp base_hgp = a2a ? builtin_hgp(base) : hgp;
  switch (graph.family()) {
    case Family::Lnn:
    case Family::AllToAll:
    case Family::Grid:
    case Family::HeavyHex:
    case Family::Ladder:
      break;
    default:
      throw std::invalid_argument("qft supports lnn, all_to_all, grid, heavy_hex, ladder");
  }
  const QftRecord rec = record_qft(base, base_hgp);
  std::vector<bool> keep(rec.entries.size(), true);
  return emit_qft(n, rec, a2a, keep);
}

SynthResult synth_qft_approx(std::size_t n, double threshold_angle) {
  if (threshold_angle < 0) throw std::invalid_argument("threshold must be non-negative");
  if (n < 2) throw std::invalid_argument("qft needs n >= 2");
  ConnectivityGraph base = make_lnn(n);
  const QftRecord rec = record_qft(base, builtin_hgp(base));
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[rec.sigma_order[r]] = r;
  std::vector<bool> keep(rec.entries.size(), true);
  for (std::size_t i = 0; i < rec.entries.size(); ++i) {
    const auto& e = rec.entries[i];
    if (!e.creation) continue;
    const std::size_t d =
        rank[e.pair_a] > rank[e.pair_b] ? rank[e.pair_a] - rank[e.pair_b]
                                        : rank[e.pair_b] - rank[e.pair_a];
    const double angle = kPi / std::pow(2.0, static_cast<double>(d));
    if (angle < threshold_angle) keep[i] = false;
  }
  return emit_qft(n, rec, true, keep);
}

namespace {

Circuit family_block(const ConnectivityGraph& graph, const Hgp& hgp, bool three_body,
                     bool reversed) {
  const std::size_t n = graph.n();
  switch (graph.family()) {
    case Family::Lnn: {
      Circuit c = build_lnn({three_body ? LnnKind::G3 : LnnKind::G2, n, 2}).circuit;
      return reversed ? reverse(c, 0, n - 1) : c;
    }
    case Family::AllToAll: {
      Circuit c =
          compress_all_to_all(build_lnn({three_body ? LnnKind::G3 : LnnKind::G2, n, 2})).circuit;
      return reversed ? reverse(c, 0, n - 1) : c;  // any relabeling is an edge-preserving map
    }
    default: {
      if (three_body) {
        throw std::invalid_argument("three-body problems need an lnn or all_to_all device");
      }
      return g2_graph(graph, reversed ? hgp.reversed() : hgp);
    }
  }
}

void emit_block_with_terms(TrackedBuilder& out, const Circuit& block,
                           const std::map<Label, double>& term_angles,
                           std::set<Label>& done) {
  out.on_cx = [&](std::size_t, std::size_t t) {
    const Label& landed = out.state().z(t);
    auto it = term_angles.find(landed);
    if (it != term_angles.end() && !done.count(landed)) {
      done.insert(landed);
      out.add_rz(t, it->second);
    }
  };
  for (const auto& m : block.moments()) {
    for (const auto& g : m) out.add(g);
  }
  out.on_cx = nullptr;
}

}  // namespace

SynthResult synth_qaoa(const QuboProblem& problem, const ConnectivityGraph& graph,
                       const Hgp& hgp, std::size_t p, const std::vector<double>& betas,
                       const std::vector<double>& alphas) {
  problem.validate();
  const std::size_t n = graph.n();
  if (problem.n != n) throw std::invalid_argument("problem size does not match device");
  if (p < 1 || betas.size() != p || alphas.size() != p) {
    throw std::invalid_argument("need one beta and one alpha per cycle");
  }
  const bool hubo = !problem.m.empty();
  Circuit block_fwd = family_block(graph, hgp, hubo, false);
  Circuit block_rev_adj = adjoint(family_block(graph, hgp, hubo, true));

  TrackedBuilder out(n);
  for (std::size_t c = 0; c < p; ++c) {
    const double beta = betas[c];
    // single-body terms where the labels sit as singles
    for (const auto& [jq, hj] : problem.h) {
      out.add_rz(find_z_single(out.state(), jq), beta * hj);
    }
    std::map<Label, double> angles;
    for (const auto& [key, val] : problem.j) {
      angles[Label::from_ids(n, {key.first, key.second})] = beta * val;
    }
    for (const auto& [key, val] : problem.m) {
      const auto [l, jj, k] = key;
      angles[Label::from_ids(n, {l, jj, k})] = beta * val;
    }
    std::set<Label> done;
    emit_block_with_terms(out, c % 2 == 0 ? block_fwd : block_rev_adj, angles, done);
    if (done.size() != angles.size()) {
      throw std::logic_error("a problem label was never produced by the generator block");
    }
    for (std::size_t q = 0; q < n; ++q) out.add_rx(q, alphas[c]);
  }

  SynthResult result;
  result.schedule = std::move(out.schedule);
  auto perm = out.state().single_label_permutation();
  result.circuit = out.take();
  if (!perm) throw std::logic_error("qaoa block chain did not end in single labels");
  result.out_perm = *perm;
  result.bit_order.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.bit_order[i] = i;
  return result;
}

SynthResult synth_trotter_mfim(const QuboProblem& problem, const ConnectivityGraph& graph,
                               const Hgp& hgp, double tau,
                               const std::map<std::size_t, double>& g) {
  problem.validate();
  if (!problem.m.empty()) {
    throw std::invalid_argument("the mixed-field Ising step takes two-body problems only");
  }
  const std::size_t n = graph.n();
  if (problem.n != n) throw std::invalid_argument("problem size does not match device");

  TrackedBuilder out(n);
  for (const auto& [q, gq] : g) out.add_rx(q, gq * tau / 2.0);
  for (const auto& [q, hq] : problem.h) out.add_rz(q, hq * tau);

  std::map<Label, double> angles;
  for (const auto& [key, val] : problem.j) {
    angles[Label::from_ids(n, {key.first, key.second})] = tau * val;
  }
  std::set<Label> done;
  emit_block_with_terms(out, family_block(graph, hgp, false, false), angles, done);
  if (done.size() != angles.size()) {
    throw std::logic_error("a coupling label was never produced by the generator block");
  }
  for (const auto& [q, gq] : g) out.add_rx(find_x_single(out.state(), q), gq * tau / 2.0);

  SynthResult result;
  result.schedule = std::move(out.schedule);
  auto perm = out.state().single_label_permutation();
  result.circuit = out.take();
  if (!perm) throw std::logic_error("two-body block did not end in single labels");
  result.out_perm = *perm;
  result.bit_order.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.bit_order[i] = i;
  return result;
}

}  // namespace twine
