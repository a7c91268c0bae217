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

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcopt/gate.hpp"

namespace qcopt {

/// A named, remappable sub-netlist. Body gates address local wires 0..arity-1.
struct BlockDef {
  std::string name;
  int arity = 0;
  std::vector<Gate> body;
};

/// Invocation of a block inside the main netlist. `gate_offset` is the number
/// of main-netlist gates preceding the call; `actuals` maps local wire i to a
/// circuit qubit.
struct BlockCall {
  int block = -1;
  int repeat = 1;
  std::vector<QubitId> actuals;
  size_t gate_offset = 0;
};

struct GateCounts {
  long long cnot = 0, h = 0, nots = 0;
  long long t_like = 0, p_like = 0, z_like = 0, rz_generic = 0;
  long long toffoli = 0;

  long long rz_total() const { return t_like + p_like + z_like + rz_generic; }
  long long total() const { return cnot + h + nots + rz_total() + toffoli; }
};

/// Ordered gate netlist with a declared qubit set and optional repeated
/// blocks. Most passes require a flat circuit (no block calls).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {}

  int num_qubits() const { return num_qubits_; }
  void set_num_qubits(int n) { num_qubits_ = n; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate>& gates() { return gates_; }

  const std::vector<BlockDef>& blocks() const { return blocks_; }
  const std::vector<BlockCall>& calls() const { return calls_; }
  bool is_flat() const { return calls_.empty(); }

  const std::vector<std::string>& qubit_names() const { return names_; }
  void set_qubit_names(std::vector<std::string> names) { names_ = std::move(names); }

  void add(const Gate& g);
  void append(const Circuit& other);  // other must address a subset of our qubits
  int add_block(BlockDef def);
  void add_call(int block, int repeat, std::vector<QubitId> actuals);

  /// True iff every gate is NOT, CNOT or TOFFOLI (the preprocessing domain).
  bool is_not_cnot_toffoli() const;
  bool has_kind(GateKind kind) const;
  bool has_symbolic_angles() const;

  /// Validates operand ranges and block mappings; throws on violation.
  void check_valid() const;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<BlockDef> blocks_;
  std::vector<BlockCall> calls_;
  std::vector<std::string> names_;
};

/// Exact per-kind tally. Block calls are counted with their multiplicity.
/// Rz classification requires concrete angles.
GateCounts counts(const Circuit& circuit);

/// #T + 0.01 * log2(n) * #CNOT. Requires num_qubits >= 2.
double aggregate_cost(const GateCounts& counts, int num_qubits);

/// Gates reversed, Rz(theta) -> Rz(2*pi - theta). Requires concrete angles
/// and a flat circuit.
Circuit inverse(const Circuit& circuit);

/// Flattens block calls into a plain netlist, preserving order and repeats.
Circuit expand_blocks(const Circuit& circuit);

/// Unordered qubit pairs touched by two-qubit (and three-qubit) gates.
std::set<std::pair<QubitId, QubitId>> interaction_set(const Circuit& circuit);

}  // namespace qcopt
