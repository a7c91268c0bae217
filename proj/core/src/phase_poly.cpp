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

#include "qcopt/phase_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcopt {

AffineFn AffineFn::unit(int num_qubits, QubitId q) {
  AffineFn f = zero(num_qubits);
  f.flip(q);
  return f;
}

AffineFn AffineFn::zero(int num_qubits) {
  AffineFn f;
  f.bits.assign(static_cast<size_t>((num_qubits + 63) / 64), 0);
  return f;
}

void AffineFn::xor_with(const AffineFn& other) {
  for (size_t i = 0; i < bits.size(); ++i) bits[i] ^= other.bits[i];
  constant ^= other.constant;
}

bool AffineFn::parity_zero() const {
  for (uint64_t w : bits)
    if (w) return false;
  return true;
}

AffineFn AffineFn::linear_part() const {
  AffineFn f = *this;
  f.constant = false;
  return f;
}

std::strong_ordering AffineFn::operator<=>(const AffineFn& other) const {
  for (size_t i = 0; i < bits.size() && i < other.bits.size(); ++i) {
    if (bits[i] != other.bits[i]) return bits[i] <=> other.bits[i];
  }
  if (bits.size() != other.bits.size()) return bits.size() <=> other.bits.size();
  return constant <=> other.constant;
}

namespace {

bool region_kind(const Gate& g) {
  return g.kind == GateKind::NOT || g.kind == GateKind::CNOT || g.kind == GateKind::RZ;
}

struct WireIndex {
  std::vector<std::vector<int>> positions;  // wire -> gate positions

  WireIndex(const std::vector<Gate>& netlist, int num_qubits)
      : positions(static_cast<size_t>(num_qubits)) {
    for (size_t pos = 0; pos < netlist.size(); ++pos)
      for (QubitId q : netlist[pos].operands()) positions[q].push_back(static_cast<int>(pos));
  }

  int rank_of(QubitId q, int pos) const {
    const auto& v = positions[q];
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), pos) - v.begin());
  }
};

}  // namespace

Region find_region(const std::vector<Gate>& netlist, int num_qubits, int seed_pos,
                   const std::vector<char>& claimed, int max_gates) {
  const Gate& seed = netlist[static_cast<size_t>(seed_pos)];
  if (seed.kind != GateKind::CNOT) throw std::invalid_argument("find_region: seed must be a CNOT");
  WireIndex index(netlist, num_qubits);

  Region region;
  auto terminator = [&](int pos) {
    return claimed[static_cast<size_t>(pos)] || !region_kind(netlist[static_cast<size_t>(pos)]);
  };

  std::vector<std::pair<QubitId, int>> queue;
  std::unordered_set<QubitId> encountered;
  auto encounter = [&](QubitId w, int pos) {
    if (encountered.insert(w).second) {
      queue.emplace_back(w, pos);
      region.wires.push_back(w);
    }
  };
  encounter(seed.qubits[0], seed_pos);
  encounter(seed.qubits[1], seed_pos);
  region.anchors.emplace_back(seed.qubits[1], seed_pos);

  int scanned = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [w, anchor] = queue[qi];
    if (max_gates > 0 && scanned > max_gates) {
      region.window[w] = {anchor, anchor};  // empty window; wire stays fenced off
      continue;
    }
    const auto& wp = index.positions[w];
    int rank = index.rank_of(w, anchor);
    int begin = -1, end = static_cast<int>(netlist.size());
    for (int i = rank - 1; i >= 0; --i) {
      int pos = wp[static_cast<size_t>(i)];
      if (terminator(pos)) {
        begin = pos;
        break;
      }
      ++scanned;
      const Gate& g = netlist[static_cast<size_t>(pos)];
      if (g.kind == GateKind::CNOT) {
        QubitId other = g.qubits[0] == w ? g.qubits[1] : g.qubits[0];
        if (!encountered.contains(other)) {
          region.anchors.emplace_back(other, pos);
          encounter(other, pos);
        }
      }
    }
    for (int i = rank; i < static_cast<int>(wp.size()); ++i) {
      int pos = wp[static_cast<size_t>(i)];
      if (terminator(pos)) {
        end = pos;
        break;
      }
      ++scanned;
      const Gate& g = netlist[static_cast<size_t>(pos)];
      if (g.kind == GateKind::CNOT) {
        QubitId other = g.qubits[0] == w ? g.qubits[1] : g.qubits[0];
        if (!encountered.contains(other)) {
          region.anchors.emplace_back(other, pos);
          encounter(other, pos);
        }
      }
    }
    region.window[w] = {begin, end};
  }

  // Pruning pass, outward from the seed. Only CNOT gates can force border
  // moves; the control-inside/target-outside case is the exception that
  // keeps the border in place.
  int min_begin = seed_pos, max_end = seed_pos;
  for (const auto& [w, be] : region.window) {
    min_begin = std::min(min_begin, be.first);
    max_end = std::max(max_end, be.second);
  }
  for (int pos = seed_pos + 1; pos < max_end; ++pos) {
    const Gate& g = netlist[static_cast<size_t>(pos)];
    if (g.kind != GateKind::CNOT || claimed[static_cast<size_t>(pos)]) continue;
    bool ci = region.inside(g.qubits[0], pos);
    bool ti = region.inside(g.qubits[1], pos);
    if (!ci && ti) region.window[g.qubits[1]].second = pos;
  }
  for (int pos = seed_pos - 1; pos > min_begin; --pos) {
    const Gate& g = netlist[static_cast<size_t>(pos)];
    if (g.kind != GateKind::CNOT || claimed[static_cast<size_t>(pos)]) continue;
    bool ci = region.inside(g.qubits[0], pos);
    bool ti = region.inside(g.qubits[1], pos);
    if (!ci && ti) region.window[g.qubits[1]].first = pos;
  }

  for (int pos = std::max(0, min_begin + 1); pos < max_end; ++pos) {
    const Gate& g = netlist[static_cast<size_t>(pos)];
    if (!region_kind(g) || claimed[static_cast<size_t>(pos)]) continue;
    bool all_inside = true;
    for (QubitId q : g.operands()) all_inside = all_inside && region.inside(q, pos);
    if (all_inside) region.members.push_back(pos);
  }
  return region;
}

Region find_region(const Circuit& circuit, int seed_pos) {
  std::vector<char> claimed(circuit.gates().size(), 0);
  return find_region(circuit.gates(), circuit.num_qubits(), seed_pos, claimed, 0);
}

PhasePolynomial build_phase_polynomial(const Circuit& circuit, const Region& region) {
  const int n = circuit.num_qubits();
  PhasePolynomial poly;
  std::unordered_map<QubitId, AffineFn> state;
  for (QubitId w : region.wires) {
    if (region.window.at(w).first < region.window.at(w).second)
      state.emplace(w, AffineFn::unit(n, w));
  }
  for (int pos : region.members) {
    const Gate& g = circuit.gates()[static_cast<size_t>(pos)];
    switch (g.kind) {
      case GateKind::CNOT:
        state.at(g.qubits[1]).xor_with(state.at(g.qubits[0]));
        break;
      case GateKind::NOT:
        state.at(g.qubits[0]).constant ^= true;
        break;
      case GateKind::RZ: {
        const AffineFn& fn = state.at(g.qubits[0]);
        poly.terms.push_back(PhaseTerm{fn, g.angle, pos, g.qubits[0]});
        auto [it, fresh] = poly.merged.try_emplace(fn, g.angle);
        if (!fresh) it->second = it->second + g.angle;
        break;
      }
      default:
        throw std::logic_error("build_phase_polynomial: non-{NOT,CNOT,Rz} member");
    }
  }
  std::erase_if(poly.merged, [](const auto& kv) { return kv.second.is_zero(); });
  poly.output = std::move(state);
  return poly;
}

Circuit propagate_nots(const Circuit& circuit) {
  if (!circuit.is_flat()) throw std::invalid_argument("propagate_nots: circuit must be flat");
  Circuit out(circuit.num_qubits());
  out.set_qubit_names(circuit.qubit_names());
  std::vector<char> pending(static_cast<size_t>(circuit.num_qubits()), 0);
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::NOT:
        pending[g.qubits[0]] ^= 1;
        break;
      case GateKind::CNOT:
        pending[g.qubits[1]] ^= pending[g.qubits[0]];
        out.add(g);
        break;
      case GateKind::RZ: {
        Gate rz = g;
        if (pending[g.qubits[0]]) rz.angle = rz.angle.negated();
        out.add(rz);
        break;
      }
      default:
        throw std::invalid_argument("propagate_nots: circuit must be over {NOT, CNOT, Rz}");
    }
  }
  for (int q = 0; q < circuit.num_qubits(); ++q)
    if (pending[static_cast<size_t>(q)]) out.add(make_not(static_cast<QubitId>(q)));
  return out;
}

namespace {

struct Insertion {
  int slot;
  QubitId wire;
  Gate gate;
};

}  // namespace

int merge_rotations(Dag& dag, int max_region_gates) {
  std::unordered_set<uint64_t> claimed_ids;
  int rz_removed = 0;

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

    Region region =
        find_region(netlist, dag.num_qubits(), seed, claimed, max_region_gates);

    // Claim everything up front so the loop always makes progress.
    for (int pos : region.members) claimed_ids.insert(dag.node(order[static_cast<size_t>(pos)]).id);

    int member_nots = 0, member_rzs = 0;
    for (int pos : region.members) {
      GateKind k = netlist[static_cast<size_t>(pos)].kind;
      if (k == GateKind::NOT) ++member_nots;
      if (k == GateKind::RZ) ++member_rzs;
    }
    if (member_nots == 0 && member_rzs == 0) continue;

    const int n = dag.num_qubits();
    std::unordered_map<QubitId, AffineFn> state;
    std::unordered_map<QubitId, char> pending;
    std::map<AffineFn, std::pair<int, QubitId>> inventory;  // fn -> leftmost (slot, wire)
    {
      std::vector<QubitId> sorted = region.wires;
      std::sort(sorted.begin(), sorted.end());
      for (QubitId w : sorted) {
        const auto& be = region.window.at(w);
        if (be.first >= be.second) continue;
        state.emplace(w, AffineFn::unit(n, w));
        pending.emplace(w, 0);
        inventory.try_emplace(state.at(w), std::pair<int, QubitId>{0, w});
      }
    }

    std::vector<Gate> skeleton;  // surviving CNOTs, original order
    std::map<AffineFn, Angle> sums;
    for (int pos : region.members) {
      const Gate& g = netlist[static_cast<size_t>(pos)];
      switch (g.kind) {
        case GateKind::NOT:
          pending[g.qubits[0]] ^= 1;
          break;
        case GateKind::CNOT: {
          state.at(g.qubits[1]).xor_with(state.at(g.qubits[0]));
          pending[g.qubits[1]] ^= pending[g.qubits[0]];
          skeleton.push_back(g);
          inventory.try_emplace(state.at(g.qubits[1]),
                                std::pair<int, QubitId>{static_cast<int>(skeleton.size()),
                                                        g.qubits[1]});
          break;
        }
        case GateKind::RZ: {
          Angle eff = pending[g.qubits[0]] ? g.angle.negated() : g.angle;
          auto [it, fresh] = sums.try_emplace(state.at(g.qubits[0]), eff);
          if (!fresh) it->second = it->second + eff;
          break;
        }
        default:
          throw std::logic_error("merge_rotations: non-region gate in member set");
      }
    }

    std::vector<Insertion> inserts;
    int emitted = 0;
    for (const auto& [fn, angle] : sums) {
      if (angle.is_zero()) continue;
      auto loc = inventory.at(fn);
      inserts.push_back(Insertion{loc.first, loc.second, make_rz(angle, loc.second)});
      ++emitted;
    }
    {
      std::vector<QubitId> sorted = region.wires;
      std::sort(sorted.begin(), sorted.end());
      for (QubitId w : sorted) {
        auto it = pending.find(w);
        if (it != pending.end() && it->second)
          inserts.push_back(Insertion{static_cast<int>(skeleton.size()), w, make_not(w)});
      }
    }
    std::stable_sort(inserts.begin(), inserts.end(), [](const Insertion& a, const Insertion& b) {
      if (a.slot != b.slot) return a.slot < b.slot;
      return a.wire < b.wire;
    });

    std::vector<Gate> replacement;
    replacement.reserve(skeleton.size() + inserts.size());
    size_t ins = 0;
    for (int slot = 0; slot <= static_cast<int>(skeleton.size()); ++slot) {
      while (ins < inserts.size() && inserts[ins].slot == slot)
        replacement.push_back(inserts[ins++].gate);
      if (slot < static_cast<int>(skeleton.size()))
        replacement.push_back(skeleton[static_cast<size_t>(slot)]);
    }

    std::vector<int> member_nodes;
    member_nodes.reserve(region.members.size());
    for (int pos : region.members) member_nodes.push_back(order[static_cast<size_t>(pos)]);
    std::vector<int> fresh = dag.splice(member_nodes, replacement);
    for (int idx : fresh) claimed_ids.insert(dag.node(idx).id);

    rz_removed += member_rzs - emitted;
  }
  return rz_removed;
}

}  // namespace qcopt
