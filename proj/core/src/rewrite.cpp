// Copyright 2026 The qcopt developers
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

#include "qcopt/rewrite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcopt/verify.hpp"

namespace qcopt {

namespace {

bool is_p(const Angle& a) {
  return !a.is_symbolic() && std::fabs(a.radians() - kPi / 2.0) < kAngleEps;
}
bool is_p_dag(const Angle& a) {
  return !a.is_symbolic() && std::fabs(a.radians() - 3.0 * kPi / 2.0) < kAngleEps;
}

bool is_h_on(const Dag& dag, int node, QubitId q) {
  return node != Dag::kBoundary && dag.gate(node).kind == GateKind::H &&
         dag.gate(node).qubits[0] == q;
}
bool is_rz_on(const Dag& dag, int node, QubitId q) {
  return node != Dag::kBoundary && dag.gate(node).kind == GateKind::RZ &&
         dag.gate(node).qubits[0] == q;
}
bool is_cnot_ctrl(const Dag& dag, int node, QubitId q) {
  return node != Dag::kBoundary && dag.gate(node).kind == GateKind::CNOT &&
         dag.gate(node).qubits[0] == q;
}
bool is_cnot_tgt(const Dag& dag, int node, QubitId q) {
  return node != Dag::kBoundary && dag.gate(node).kind == GateKind::CNOT &&
         dag.gate(node).qubits[1] == q;
}

// Rule (a): h is H on the control wire directly before the CNOT.
bool try_hadamard_cnot_flip(Dag& dag, int h) {
  QubitId a = dag.gate(h).qubits[0];
  int x = dag.neighbor(h, a, Dag::Direction::Next);
  if (!is_cnot_ctrl(dag, x, a)) return false;
  QubitId b = dag.gate(x).qubits[1];
  int hb = dag.neighbor(x, b, Dag::Direction::Prev);
  int ha2 = dag.neighbor(x, a, Dag::Direction::Next);
  int hb2 = dag.neighbor(x, b, Dag::Direction::Next);
  if (!is_h_on(dag, hb, b) || !is_h_on(dag, ha2, a) || !is_h_on(dag, hb2, b)) return false;
  dag.splice({h, hb, x, ha2, hb2}, {make_cnot(b, a)});
  return true;
}

// Rules (d)/(e): H P [CNOT run targeting q] P* H -> P* [run] P (and mirror).
bool try_hadamard_conjugated_run(Dag& dag, int h) {
  QubitId q = dag.gate(h).qubits[0];
  int p1 = dag.neighbor(h, q, Dag::Direction::Next);
  if (!is_rz_on(dag, p1, q)) return false;
  const Angle& a1 = dag.gate(p1).angle;
  bool p_then_pdag;
  if (is_p(a1)) {
    p_then_pdag = true;
  } else if (is_p_dag(a1)) {
    p_then_pdag = false;
  } else {
    return false;
  }
  int cur = dag.neighbor(p1, q, Dag::Direction::Next);
  int run = 0;
  while (is_cnot_tgt(dag, cur, q)) {
    cur = dag.neighbor(cur, q, Dag::Direction::Next);
    ++run;
  }
  if (run == 0) return false;
  int p2 = cur;
  if (!is_rz_on(dag, p2, q)) return false;
  const Angle& a2 = dag.gate(p2).angle;
  if (p_then_pdag ? !is_p_dag(a2) : !is_p(a2)) return false;
  int h2 = dag.neighbor(p2, q, Dag::Direction::Next);
  if (!is_h_on(dag, h2, q)) return false;
  // Drop both H gates and swap the two phase angles in place.
  Angle first = dag.gate(p1).angle;
  dag.set_angle(p1, dag.gate(p2).angle);
  dag.set_angle(p2, first);
  dag.erase(h);
  dag.erase(h2);
  return true;
}

// Rules (b)/(c): H P H -> P* H P* and H P* H -> P H P.
bool try_hadamard_p_sandwich(Dag& dag, int h) {
  QubitId q = dag.gate(h).qubits[0];
  int p = dag.neighbor(h, q, Dag::Direction::Next);
  if (!is_rz_on(dag, p, q)) return false;
  const Angle& a = dag.gate(p).angle;
  double flipped;
  if (is_p(a)) {
    flipped = 3.0 * kPi / 2.0;
  } else if (is_p_dag(a)) {
    flipped = kPi / 2.0;
  } else {
    return false;
  }
  int h2 = dag.neighbor(p, q, Dag::Direction::Next);
  if (!is_h_on(dag, h2, q)) return false;
  dag.splice({h, p, h2}, {make_rz(flipped, q), make_h(q), make_rz(flipped, q)});
  return true;
}

}  // namespace

int reduce_hadamards(Dag& dag) {
  int h_removed = 0;
  for (int node : dag.topo_order()) {
    if (!dag.alive(node) || dag.gate(node).kind != GateKind::H) continue;
    if (try_hadamard_cnot_flip(dag, node)) {
      h_removed += 4;
      continue;
    }
    if (try_hadamard_conjugated_run(dag, node)) {
      h_removed += 2;
      continue;
    }
    if (try_hadamard_p_sandwich(dag, node)) {
      h_removed += 1;
      continue;
    }
  }
  return h_removed;
}

std::optional<RzHop> rz_commute_step(const Dag& dag, int at, QubitId q) {
  if (at == Dag::kBoundary) return std::nullopt;
  const Gate& g = dag.gate(at);
  if (g.kind == GateKind::CNOT && g.qubits[0] == q) {
    // Diagonal on the control wire.
    return RzHop{at, dag.neighbor(at, q, Dag::Direction::Next)};
  }
  if (g.kind == GateKind::CNOT && g.qubits[1] == q) {
    // CNOT(a;q) Rz(q) CNOT(a;q) is diagonal.
    QubitId a = g.qubits[0];
    int n1 = dag.neighbor(at, q, Dag::Direction::Next);
    if (!is_rz_on(dag, n1, q)) return std::nullopt;
    int n2 = dag.neighbor(n1, q, Dag::Direction::Next);
    if (!is_cnot_tgt(dag, n2, q) || dag.gate(n2).qubits[0] != a) return std::nullopt;
    return RzHop{n2, dag.neighbor(n2, q, Dag::Direction::Next)};
  }
  if (g.kind == GateKind::H && g.qubits[0] == q) {
    // H(q) CNOT(a;q) H(q) is Z-controlled on q.
    int n1 = dag.neighbor(at, q, Dag::Direction::Next);
    if (!is_cnot_tgt(dag, n1, q)) return std::nullopt;
    int n2 = dag.neighbor(n1, q, Dag::Direction::Next);
    if (!is_h_on(dag, n2, q)) return std::nullopt;
    return RzHop{n2, dag.neighbor(n2, q, Dag::Direction::Next)};
  }
  return std::nullopt;
}

int merge_adjacent_rz(Dag& dag, int g1, int g2) {
  const Gate& a = dag.gate(g1);
  const Gate& b = dag.gate(g2);
  if (a.kind != GateKind::RZ || b.kind != GateKind::RZ || a.qubits[0] != b.qubits[0])
    throw std::invalid_argument("merge_adjacent_rz: expects two Rz gates on one wire");
  Angle merged = a.angle + b.angle;
  if (merged.is_zero()) {
    dag.erase(g1);
    dag.erase(g2);
    return 2;
  }
  dag.set_angle(g2, merged);
  dag.erase(g1);
  return 1;
}

namespace {

// Attempts cancellation/merging for one single-qubit gate. On success fills
// `resume` with the node to re-examine (the predecessor of the deleted
// mover) and returns the number of gates removed.
int try_cancel_single(Dag& dag, int u, const RewriteOptions& opts, int& resume) {
  const Gate g = dag.gate(u);
  QubitId q = g.qubits[0];
  resume = Dag::kBoundary;
  if (g.kind == GateKind::H || g.kind == GateKind::NOT) {
    int v = dag.neighbor(u, q, Dag::Direction::Next);
    if (v == Dag::kBoundary) return 0;
    if (dag.gate(v).kind != g.kind) return 0;
    resume = dag.neighbor(u, q, Dag::Direction::Prev);
    dag.erase(u);
    dag.erase(v);
    return 2;
  }
  if (g.kind != GateKind::RZ) return 0;
  int cur = dag.neighbor(u, q, Dag::Direction::Next);
  int hops = 0;
  while (cur != Dag::kBoundary) {
    if (is_rz_on(dag, cur, q)) {
      resume = dag.neighbor(u, q, Dag::Direction::Prev);
      return merge_adjacent_rz(dag, u, cur);
    }
    auto hop = rz_commute_step(dag, cur, q);
    if (!hop) return 0;
    cur = hop->next;
    if (opts.max_commute_window > 0 && ++hops > opts.max_commute_window) return 0;
  }
  return 0;
}

}  // namespace

int cancel_single_qubit(Dag& dag, const RewriteOptions& opts) {
  int removed = 0;
  std::vector<int> order = dag.topo_order();
  std::vector<int> pending;
  auto process = [&](int node) {
    while (dag.alive(node)) {
      const GateKind k = dag.gate(node).kind;
      if (k != GateKind::H && k != GateKind::NOT && k != GateKind::RZ) return;
      int resume = Dag::kBoundary;
      int r = try_cancel_single(dag, node, opts, resume);
      if (r == 0) return;
      removed += r;
      if (resume == Dag::kBoundary) return;
      node = resume;
    }
  };
  for (int node : order) {
    if (!dag.alive(node)) continue;
    process(node);
  }
  (void)pending;
  return removed;
}

int cancel_two_qubit(Dag& dag, const RewriteOptions& opts) {
  int removed = 0;
  std::vector<int> order = dag.topo_order();
  auto try_cancel = [&](int m) -> bool {
    const Gate g = dag.gate(m);
    QubitId c = g.qubits[0], t = g.qubits[1];
    int cur_c = dag.neighbor(m, c, Dag::Direction::Next);
    int cur_t = dag.neighbor(m, t, Dag::Direction::Next);
    int hops = 0;
    while (true) {
      if (opts.max_commute_window > 0 && hops > opts.max_commute_window) return false;
      if (cur_c != Dag::kBoundary && cur_c == cur_t) {
        const Gate& x = dag.gate(cur_c);
        if (x.kind == GateKind::CNOT && x.qubits[0] == c && x.qubits[1] == t) {
          dag.erase(m);
          dag.erase(cur_c);
          removed += 2;
          return true;
        }
        return false;
      }
      // Commute past the next gate on the control wire: another CNOT
      // sharing the control and not touching the target.
      if (cur_c != Dag::kBoundary) {
        const Gate& x = dag.gate(cur_c);
        if (x.kind == GateKind::CNOT && x.qubits[0] == c && !x.acts_on(t)) {
          cur_c = dag.neighbor(cur_c, c, Dag::Direction::Next);
          ++hops;
          continue;
        }
      }
      // Commute on the target wire: shared-target CNOT, or H CNOT(t;b) H.
      if (cur_t != Dag::kBoundary) {
        const Gate& x = dag.gate(cur_t);
        if (x.kind == GateKind::CNOT && x.qubits[1] == t && !x.acts_on(c)) {
          cur_t = dag.neighbor(cur_t, t, Dag::Direction::Next);
          ++hops;
          continue;
        }
        if (x.kind == GateKind::H && x.qubits[0] == t) {
          int n1 = dag.neighbor(cur_t, t, Dag::Direction::Next);
          if (is_cnot_ctrl(dag, n1, t) && !dag.gate(n1).acts_on(c)) {
            int n2 = dag.neighbor(n1, t, Dag::Direction::Next);
            if (is_h_on(dag, n2, t)) {
              cur_t = dag.neighbor(n2, t, Dag::Direction::Next);
              hops += 3;
              continue;
            }
          }
        }
      }
      return false;
    }
  };
  for (int node : order) {
    if (!dag.alive(node) || dag.gate(node).kind != GateKind::CNOT) continue;
    int prev_c = dag.neighbor(node, dag.gate(node).qubits[0], Dag::Direction::Prev);
    if (try_cancel(node)) {
      // Catch pairs that became adjacent across the removed window.
      while (prev_c != Dag::kBoundary && dag.alive(prev_c) &&
             dag.gate(prev_c).kind == GateKind::CNOT) {
        int pp = dag.neighbor(prev_c, dag.gate(prev_c).qubits[0], Dag::Direction::Prev);
        if (!try_cancel(prev_c)) break;
        prev_c = pp;
      }
    }
  }
  return removed;
}

namespace {

Circuit chain(int n, std::initializer_list<Gate> gates) {
  Circuit c(n);
  for (const Gate& g : gates) c.add(g);
  return c;
}

void check_commutes(const std::string& name, const Circuit& mover, const Circuit& block) {
  Circuit ab(std::max(mover.num_qubits(), block.num_qubits()));
  Circuit ba(ab.num_qubits());
  for (const Gate& g : mover.gates()) ab.add(g);
  for (const Gate& g : block.gates()) ab.add(g);
  for (const Gate& g : block.gates()) ba.add(g);
  for (const Gate& g : mover.gates()) ba.add(g);
  auto r = equivalent_up_to_phase(ab, ba, 1e-12);
  if (!r.equivalent)
    throw std::logic_error("commutation pattern failed certification: " + name);
}

void check_identity(const std::string& name, const Circuit& lhs, const Circuit& rhs) {
  auto r = equivalent_up_to_phase(lhs, rhs, 1e-12);
  if (!r.equivalent) throw std::logic_error("rewrite rule failed certification: " + name);
}

}  // namespace

void verify_builtin_patterns() {
  const double p = kPi / 2.0, pd = 3.0 * kPi / 2.0;
  // Fig. 4 commutation patterns.
  check_commutes("rz-past-cnot-control", chain(2, {make_rz(0.7, 0)}), chain(2, {make_cnot(0, 1)}));
  check_commutes("rz-past-h-cnot-h", chain(2, {make_rz(0.7, 0)}),
                 chain(2, {make_h(0), make_cnot(1, 0), make_h(0)}));
  check_commutes("rz-past-cnot-rz-cnot", chain(2, {make_rz(0.7, 0)}),
                 chain(2, {make_cnot(1, 0), make_rz(1.1, 0), make_cnot(1, 0)}));
  check_commutes("cnot-shared-control", chain(3, {make_cnot(0, 1)}), chain(3, {make_cnot(0, 2)}));
  check_commutes("cnot-shared-target", chain(3, {make_cnot(0, 1)}), chain(3, {make_cnot(2, 1)}));
  check_commutes("cnot-past-h-cnot-h", chain(3, {make_cnot(0, 1)}),
                 chain(3, {make_h(1), make_cnot(1, 2), make_h(1)}));
  // Fig. 3 Hadamard reductions.
  check_identity("h-cnot-reversal",
                 chain(2, {make_h(0), make_h(1), make_cnot(0, 1), make_h(0), make_h(1)}),
                 chain(2, {make_cnot(1, 0)}));
  check_identity("h-p-h", chain(1, {make_h(0), make_rz(p, 0), make_h(0)}),
                 chain(1, {make_rz(pd, 0), make_h(0), make_rz(pd, 0)}));
  check_identity("h-pdag-h", chain(1, {make_h(0), make_rz(pd, 0), make_h(0)}),
                 chain(1, {make_rz(p, 0), make_h(0), make_rz(p, 0)}));
  check_identity("h-p-cnot-pdag-h",
                 chain(2, {make_h(1), make_rz(p, 1), make_cnot(0, 1), make_rz(pd, 1), make_h(1)}),
                 chain(2, {make_rz(pd, 1), make_cnot(0, 1), make_rz(p, 1)}));
  check_identity("h-pdag-cnot-p-h",
                 chain(2, {make_h(1), make_rz(pd, 1), make_cnot(0, 1), make_rz(p, 1), make_h(1)}),
                 chain(2, {make_rz(p, 1), make_cnot(0, 1), make_rz(pd, 1)}));
  check_identity("h-p-cnotrun-pdag-h",
                 chain(3, {make_h(1), make_rz(p, 1), make_cnot(0, 1), make_cnot(2, 1),
                           make_rz(pd, 1), make_h(1)}),
                 chain(3, {make_rz(pd, 1), make_cnot(0, 1), make_cnot(2, 1), make_rz(p, 1)}));
  check_identity("h-pdag-cnotrun-p-h",
                 chain(3, {make_h(1), make_rz(pd, 1), make_cnot(0, 1), make_cnot(2, 1),
                           make_rz(p, 1), make_h(1)}),
                 chain(3, {make_rz(p, 1), make_cnot(0, 1), make_cnot(2, 1), make_rz(pd, 1)}));
}

}  // namespace qcopt
