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

#include "qcopt/floating.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qcopt {

long long FloatingRegion::cnot_count() const {
  long long c = 0;
  for (int idx : skeleton.topo_order())
    if (skeleton.gate(idx).kind == GateKind::CNOT) ++c;
  return c;
}

FloatingRegion floating_region_from_circuit(const Circuit& circuit) {
  FloatingRegion region(circuit.num_qubits());
  std::vector<AffineFn> state;
  for (int q = 0; q < circuit.num_qubits(); ++q)
    state.push_back(AffineFn::unit(circuit.num_qubits(), static_cast<QubitId>(q)));
  std::map<AffineFn, Angle> sums;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        state[g.qubits[1]].xor_with(state[g.qubits[0]]);
        region.skeleton.push_back(g);
        break;
      case GateKind::NOT:
        state[g.qubits[0]].constant ^= true;
        region.skeleton.push_back(g);
        break;
      case GateKind::RZ: {
        const AffineFn& fn = state[g.qubits[0]];
        Angle eff = fn.constant ? g.angle.negated() : g.angle;
        auto [it, fresh] = sums.try_emplace(fn.linear_part(), eff);
        if (!fresh) it->second = it->second + eff;
        break;
      }
      default:
        throw std::invalid_argument("floating region: circuit must be over {NOT, CNOT, Rz}");
    }
  }
  for (auto& [key, angle] : sums) {
    if (!angle.is_zero()) region.terms.push_back(FloatTerm{key, angle});
  }
  return region;
}

std::map<AffineFn, std::vector<FloatLocation>> enumerate_placements(const FloatingRegion& region) {
  const Dag& dag = region.skeleton;
  const int n = dag.num_qubits();
  std::map<AffineFn, std::vector<FloatLocation>> inventory;
  std::vector<AffineFn> state;
  std::vector<int> last_writer(static_cast<size_t>(n), Dag::kBoundary);
  for (int q = 0; q < n; ++q) state.push_back(AffineFn::unit(n, static_cast<QubitId>(q)));
  auto record = [&](QubitId w, int order) {
    const AffineFn& fn = state[w];
    inventory[fn.linear_part()].push_back(
        FloatLocation{last_writer[w], w, fn.constant, order});
  };
  // Wire heads: every wire that carries any skeleton gate contributes its
  // input value as a candidate location.
  for (int q = 0; q < n; ++q)
    if (dag.head(static_cast<QubitId>(q)) != Dag::kBoundary) record(static_cast<QubitId>(q), -1);
  std::vector<int> order = dag.topo_order();
  for (size_t i = 0; i < order.size(); ++i) {
    const Gate& g = dag.gate(order[i]);
    if (g.kind == GateKind::CNOT) {
      state[g.qubits[1]].xor_with(state[g.qubits[0]]);
    } else if (g.kind == GateKind::NOT) {
      state[g.qubits[0]].constant ^= true;
    } else {
      continue;  // materialized Rz gates do not change wire values
    }
    QubitId w = g.target();
    last_writer[w] = order[i];
    record(w, static_cast<int>(i));
  }
  return inventory;
}

namespace {

bool terms_survive(const FloatingRegion& region) {
  auto inventory = enumerate_placements(region);
  for (const FloatTerm& t : region.terms)
    if (!inventory.contains(t.key)) return false;
  return true;
}

// Finds the partner CNOT reachable from `mover` by the shared-control /
// shared-target commutation patterns on the skeleton. Returns the node.
std::optional<int> find_cancel_partner(const Dag& dag, int mover) {
  const Gate g = dag.gate(mover);
  QubitId c = g.qubits[0], t = g.qubits[1];
  int cur_c = dag.neighbor(mover, c, Dag::Direction::Next);
  int cur_t = dag.neighbor(mover, t, Dag::Direction::Next);
  while (true) {
    if (cur_c != Dag::kBoundary && cur_c == cur_t) {
      const Gate& x = dag.gate(cur_c);
      if (x.kind == GateKind::CNOT && x.qubits[0] == c && x.qubits[1] == t) return cur_c;
      return std::nullopt;
    }
    if (cur_c != Dag::kBoundary) {
      const Gate& x = dag.gate(cur_c);
      if (x.kind == GateKind::CNOT && x.qubits[0] == c && !x.acts_on(t)) {
        cur_c = dag.neighbor(cur_c, c, Dag::Direction::Next);
        continue;
      }
    }
    if (cur_t != Dag::kBoundary) {
      const Gate& x = dag.gate(cur_t);
      if (x.kind == GateKind::CNOT && x.qubits[1] == t && !x.acts_on(c)) {
        cur_t = dag.neighbor(cur_t, t, Dag::Direction::Next);
        continue;
      }
    }
    return std::nullopt;
  }
}

}  // namespace

int cancel_two_qubit_floating(FloatingRegion& region) {
  int removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int node : region.skeleton.topo_order()) {
      if (!region.skeleton.alive(node) || region.skeleton.gate(node).kind != GateKind::CNOT)
        continue;
      auto partner = find_cancel_partner(region.skeleton, node);
      if (!partner) continue;
      FloatingRegion trial = region;
      trial.skeleton.erase(node);
      trial.skeleton.erase(*partner);
      if (!terms_survive(trial)) continue;
      region = std::move(trial);
      removed += 2;
      changed = true;
      break;
    }
  }
  return removed;
}

namespace {

struct RuleMatch {
  std::vector<int> nodes;            // skeleton nodes aligned with rule.pattern
  std::vector<QubitId> wire_of;      // rule wire -> skeleton wire
};

Gate map_gate(const Gate& g, const std::vector<QubitId>& wire_of) {
  Gate mapped = g;
  for (int i = 0; i < g.arity(); ++i)
    mapped.qubits[static_cast<size_t>(i)] = wire_of[g.qubits[static_cast<size_t>(i)]];
  return mapped;
}

bool gate_matches(const Gate& pattern, const Gate& g) {
  if (pattern.kind != g.kind) return false;
  if (pattern.kind == GateKind::RZ && !pattern.angle.approx_equals(g.angle)) return false;
  return true;
}

std::optional<RuleMatch> try_match_at(const Dag& dag, const RewriteRule& rule, int start) {
  const Gate& p0 = rule.pattern[0];
  const Gate& g0 = dag.gate(start);
  if (!gate_matches(p0, g0)) return std::nullopt;
  RuleMatch m;
  m.wire_of.assign(static_cast<size_t>(rule.num_wires), static_cast<QubitId>(-1));
  std::vector<char> wire_used(static_cast<size_t>(dag.num_qubits()), 0);
  auto bind = [&](QubitId pw, QubitId gw) {
    if (m.wire_of[pw] != static_cast<QubitId>(-1)) return m.wire_of[pw] == gw;
    if (wire_used[gw]) return false;
    m.wire_of[pw] = gw;
    wire_used[gw] = 1;
    return true;
  };
  for (int i = 0; i < p0.arity(); ++i)
    if (!bind(p0.qubits[static_cast<size_t>(i)], g0.qubits[static_cast<size_t>(i)]))
      return std::nullopt;
  m.nodes.push_back(start);
  std::vector<int> cursor(static_cast<size_t>(dag.num_qubits()), Dag::kBoundary);
  for (QubitId q : g0.operands()) cursor[q] = start;

  for (size_t k = 1; k < rule.pattern.size(); ++k) {
    const Gate& pk = rule.pattern[k];
    int candidate = Dag::kBoundary;
    for (int i = 0; i < pk.arity(); ++i) {
      QubitId pw = pk.qubits[static_cast<size_t>(i)];
      if (m.wire_of[pw] == static_cast<QubitId>(-1)) continue;
      QubitId gw = m.wire_of[pw];
      if (cursor[gw] == Dag::kBoundary) continue;
      int next = dag.neighbor(cursor[gw], gw, Dag::Direction::Next);
      if (next == Dag::kBoundary) return std::nullopt;
      if (candidate == Dag::kBoundary) candidate = next;
      else if (candidate != next) return std::nullopt;
    }
    if (candidate == Dag::kBoundary) return std::nullopt;  // disconnected pattern
    const Gate& gk = dag.gate(candidate);
    if (!gate_matches(pk, gk)) return std::nullopt;
    if (gk.arity() != pk.arity()) return std::nullopt;
    for (int i = 0; i < pk.arity(); ++i)
      if (!bind(pk.qubits[static_cast<size_t>(i)], gk.qubits[static_cast<size_t>(i)]))
        return std::nullopt;
    m.nodes.push_back(candidate);
    for (QubitId q : gk.operands()) cursor[q] = candidate;
  }
  return m;
}

bool apply_match(FloatingRegion& region, const RewriteRule& rule, const RuleMatch& match) {
  std::vector<Gate> replacement;
  replacement.reserve(rule.replacement.size());
  for (const Gate& g : rule.replacement) replacement.push_back(map_gate(g, match.wire_of));
  region.skeleton.splice(match.nodes, replacement);
  return true;
}

}  // namespace

int apply_preserving_rules(FloatingRegion& region, const std::vector<RewriteRule>& rules) {
  int enabled = 0;
  for (const RewriteRule& rule : rules) {
    if (rule.kind != RuleKind::PRESERVING) continue;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int node : region.skeleton.topo_order()) {
        if (!region.skeleton.alive(node)) continue;
        auto match = try_match_at(region.skeleton, rule, node);
        if (!match) continue;
        FloatingRegion trial = region;
        apply_match(trial, rule, *match);
        if (!terms_survive(trial)) continue;
        long long before = region.cnot_count();
        int cancels = cancel_two_qubit_floating(trial);
        if (trial.cnot_count() < before) {
          region = std::move(trial);
          enabled += cancels;
          progress = true;
          break;
        }
      }
    }
  }
  return enabled;
}

int apply_reducing_rules(FloatingRegion& region, const std::vector<RewriteRule>& rules) {
  int removed = 0;
  for (const RewriteRule& rule : rules) {
    if (rule.kind != RuleKind::REDUCING) continue;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int node : region.skeleton.topo_order()) {
        if (!region.skeleton.alive(node)) continue;
        auto match = try_match_at(region.skeleton, rule, node);
        if (!match) continue;
        FloatingRegion trial = region;
        apply_match(trial, rule, *match);
        if (!terms_survive(trial)) continue;
        removed += static_cast<int>(rule.pattern.size() - rule.replacement.size());
        region = std::move(trial);
        progress = true;
        break;
      }
    }
  }
  return removed;
}

Circuit materialize(const FloatingRegion& region) {
  auto inventory = enumerate_placements(region);
  Dag out = region.skeleton;
  // Deterministic placement order; each term goes to its leftmost candidate.
  std::vector<const FloatTerm*> terms;
  for (const FloatTerm& t : region.terms) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [](const FloatTerm* a, const FloatTerm* b) { return a->key < b->key; });
  for (const FloatTerm* t : terms) {
    auto it = inventory.find(t->key);
    if (it == inventory.end() || it->second.empty())
      throw std::logic_error("floating term lost every candidate placement");
    const FloatLocation& loc = *std::min_element(it->second.begin(), it->second.end());
    Angle angle = loc.complemented ? t->angle.negated() : t->angle;
    int prev = loc.after_node;
    out.insert(make_rz(angle, loc.wire), {&prev, 1});
  }
  return out.to_netlist();
}

int routine5(Dag& dag, const std::vector<RewriteRule>& rules, int max_region_gates) {
  std::unordered_set<uint64_t> claimed_ids;
  int removed_total = 0;

  while (true) {
    std::vector<int> order = dag.topo_order();
    std::vector<Gate> netlist;
    netlist.reserve(order.size());
    std::vector<char> claimed(order.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) {
      netlist.push_back(dag.gate(order[i]));
      claimed[i] = claimed_ids.contains(dag.node(order[i]).id) ? 1 : 0;
    }
    int seed = -1;
    for (size_t i = 0; i < netlist.size(); ++i) {
      if (netlist[i].kind == GateKind::CNOT && !claimed[i]) {
        seed = static_cast<int>(i);
        break;
      }
    }
    if (seed < 0) break;

    Region region = find_region(netlist, dag.num_qubits(), seed, claimed, max_region_gates);
    for (int pos : region.members) claimed_ids.insert(dag.node(order[static_cast<size_t>(pos)]).id);

    // Extract the region into a floating representation.
    Circuit sub(dag.num_qubits());
    for (int pos : region.members) sub.add(netlist[static_cast<size_t>(pos)]);
    FloatingRegion fr = floating_region_from_circuit(sub);
    size_t before = region.members.size();

    cancel_two_qubit_floating(fr);
    apply_preserving_rules(fr, rules);
    apply_reducing_rules(fr, rules);
    Circuit rebuilt = materialize(fr);

    if (rebuilt.gates().size() != before) {
      std::vector<int> member_nodes;
      member_nodes.reserve(region.members.size());
      for (int pos : region.members) member_nodes.push_back(order[static_cast<size_t>(pos)]);
      std::vector<int> fresh = dag.splice(member_nodes, rebuilt.gates());
      for (int idx : fresh) claimed_ids.insert(dag.node(idx).id);
      removed_total += static_cast<int>(before - rebuilt.gates().size());
    } else {
      // Even without a net count change the placements may have moved;
      // rebuild only when the gate sequence actually differs.
      bool same = true;
      for (size_t i = 0; i < before && same; ++i)
        same = rebuilt.gates()[i] == netlist[static_cast<size_t>(region.members[i])];
      if (!same) {
        std::vector<int> member_nodes;
        for (int pos : region.members) member_nodes.push_back(order[static_cast<size_t>(pos)]);
        std::vector<int> fresh = dag.splice(member_nodes, rebuilt.gates());
        for (int idx : fresh) claimed_ids.insert(dag.node(idx).id);
      }
    }
  }
  return removed_total;
}

}  // namespace qcopt
