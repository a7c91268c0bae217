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

#include "qcopt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcopt {

void Circuit::add(const Gate& g) {
  for (QubitId q : g.operands()) {
    if (static_cast<int>(q) >= num_qubits_)
      throw std::out_of_range("Circuit::add: operand exceeds qubit count");
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_)
    throw std::out_of_range("Circuit::append: other circuit has more qubits");
  if (!other.is_flat()) throw std::invalid_argument("Circuit::append: other must be flat");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

int Circuit::add_block(BlockDef def) {
  for (const Gate& g : def.body) {
    for (QubitId q : g.operands()) {
      if (static_cast<int>(q) >= def.arity)
        throw std::out_of_range("Circuit::add_block: body gate exceeds block arity");
    }
  }
  blocks_.push_back(std::move(def));
  return static_cast<int>(blocks_.size()) - 1;
}

void Circuit::add_call(int block, int repeat, std::vector<QubitId> actuals) {
  if (block < 0 || block >= static_cast<int>(blocks_.size()))
    throw std::out_of_range("Circuit::add_call: unknown block");
  const BlockDef& def = blocks_[static_cast<size_t>(block)];
  if (static_cast<int>(actuals.size()) != def.arity)
    throw std::invalid_argument("Circuit::add_call: actual count does not match block arity");
  std::set<QubitId> distinct(actuals.begin(), actuals.end());
  if (distinct.size() != actuals.size())
    throw std::invalid_argument("Circuit::add_call: block qubit mapping not injective");
  for (QubitId q : actuals) {
    if (static_cast<int>(q) >= num_qubits_)
      throw std::out_of_range("Circuit::add_call: actual qubit out of range");
  }
  if (repeat < 1) throw std::invalid_argument("Circuit::add_call: repeat must be >= 1");
  calls_.push_back(BlockCall{block, repeat, std::move(actuals), gates_.size()});
}

bool Circuit::is_not_cnot_toffoli() const {
  auto ok = [](const Gate& g) {
    return g.kind == GateKind::NOT || g.kind == GateKind::CNOT || g.kind == GateKind::TOFFOLI;
  };
  for (const Gate& g : gates_)
    if (!ok(g)) return false;
  for (const BlockDef& b : blocks_)
    for (const Gate& g : b.body)
      if (!ok(g)) return false;
  return true;
}

bool Circuit::has_kind(GateKind kind) const {
  for (const Gate& g : gates_)
    if (g.kind == kind) return true;
  for (const BlockDef& b : blocks_)
    for (const Gate& g : b.body)
      if (g.kind == kind) return true;
  return false;
}

bool Circuit::has_symbolic_angles() const {
  for (const Gate& g : gates_)
    if (g.kind == GateKind::RZ && g.angle.is_symbolic()) return true;
  for (const BlockDef& b : blocks_)
    for (const Gate& g : b.body)
      if (g.kind == GateKind::RZ && g.angle.is_symbolic()) return true;
  return false;
}

void Circuit::check_valid() const {
  for (const Gate& g : gates_) {
    for (QubitId q : g.operands()) {
      if (static_cast<int>(q) >= num_qubits_)
        throw std::out_of_range("Circuit: gate operand out of range");
    }
    auto ops = g.operands();
    for (size_t i = 0; i < ops.size(); ++i)
      for (size_t j = i + 1; j < ops.size(); ++j)
        if (ops[i] == ops[j]) throw std::invalid_argument("Circuit: repeated operand");
  }
  for (const BlockCall& c : calls_) {
    if (c.block < 0 || c.block >= static_cast<int>(blocks_.size()))
      throw std::out_of_range("Circuit: call references unknown block");
    if (c.gate_offset > gates_.size())
      throw std::out_of_range("Circuit: call offset out of range");
  }
}

namespace {

void tally(const Gate& g, long long multiplicity, GateCounts& c) {
  switch (g.kind) {
    case GateKind::NOT:
      c.nots += multiplicity;
      break;
    case GateKind::H:
      c.h += multiplicity;
      break;
    case GateKind::CNOT:
      c.cnot += multiplicity;
      break;
    case GateKind::TOFFOLI:
      c.toffoli += multiplicity;
      break;
    case GateKind::RZ:
      switch (classify_rz(g.angle)) {
        case RzClass::T_LIKE: c.t_like += multiplicity; break;
        case RzClass::P_LIKE: c.p_like += multiplicity; break;
        case RzClass::Z_LIKE: c.z_like += multiplicity; break;
        case RzClass::GENERIC: c.rz_generic += multiplicity; break;
      }
      break;
  }
}

}  // namespace

GateCounts counts(const Circuit& circuit) {
  GateCounts c;
  for (const Gate& g : circuit.gates()) tally(g, 1, c);
  for (const BlockCall& call : circuit.calls()) {
    const BlockDef& def = circuit.blocks()[static_cast<size_t>(call.block)];
    for (const Gate& g : def.body) tally(g, call.repeat, c);
  }
  return c;
}

double aggregate_cost(const GateCounts& counts, int num_qubits) {
  if (num_qubits < 2) throw std::domain_error("aggregate_cost: requires at least 2 qubits");
  return static_cast<double>(counts.t_like) +
         0.01 * std::log2(static_cast<double>(num_qubits)) * static_cast<double>(counts.cnot);
}

Circuit inverse(const Circuit& circuit) {
  if (!circuit.is_flat()) throw std::invalid_argument("inverse: circuit must be flat");
  if (circuit.has_symbolic_angles())
    throw std::domain_error("inverse: symbolic angles cannot be inverted");
  Circuit out(circuit.num_qubits());
  out.set_qubit_names(circuit.qubit_names());
  const auto& gs = circuit.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::RZ) g.angle = g.angle.negated();
    out.add(g);
  }
  return out;
}

Circuit expand_blocks(const Circuit& circuit) {
  circuit.check_valid();
  Circuit out(circuit.num_qubits());
  out.set_qubit_names(circuit.qubit_names());

  // Calls are interleaved with plain gates by offset; both stay in order.
  size_t call_idx = 0;
  const auto& calls = circuit.calls();
  const auto& gates = circuit.gates();
  for (size_t pos = 0; pos <= gates.size(); ++pos) {
    while (call_idx < calls.size() && calls[call_idx].gate_offset == pos) {
      const BlockCall& call = calls[call_idx];
      const BlockDef& def = circuit.blocks()[static_cast<size_t>(call.block)];
      for (int r = 0; r < call.repeat; ++r) {
        for (const Gate& g : def.body) {
          Gate mapped = g;
          for (int i = 0; i < g.arity(); ++i)
            mapped.qubits[static_cast<size_t>(i)] = call.actuals[g.qubits[static_cast<size_t>(i)]];
          out.add(mapped);
        }
      }
      ++call_idx;
    }
    if (pos < gates.size()) out.add(gates[pos]);
  }
  return out;
}

std::set<std::pair<QubitId, QubitId>> interaction_set(const Circuit& circuit) {
  std::set<std::pair<QubitId, QubitId>> pairs;
  auto add_gate = [&pairs](const Gate& g) {
    auto ops = g.operands();
    for (size_t i = 0; i < ops.size(); ++i)
      for (size_t j = i + 1; j < ops.size(); ++j)
        pairs.insert({std::min(ops[i], ops[j]), std::max(ops[i], ops[j])});
  };
  for (const Gate& g : circuit.gates()) add_gate(g);
  for (const BlockCall& call : circuit.calls()) {
    const BlockDef& def = circuit.blocks()[static_cast<size_t>(call.block)];
    for (const Gate& g : def.body) {
      Gate mapped = g;
      for (int i = 0; i < g.arity(); ++i)
        mapped.qubits[static_cast<size_t>(i)] = call.actuals[g.qubits[static_cast<size_t>(i)]];
      add_gate(mapped);
    }
  }
  return pairs;
}

}  // namespace qcopt
