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

#include <compare>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qcopt/dag.hpp"

namespace qcopt {

/// Parity of a subset of circuit inputs, optionally complemented.
struct AffineFn {
  std::vector<uint64_t> bits;
  bool constant = false;

  static AffineFn unit(int num_qubits, QubitId q);
  static AffineFn zero(int num_qubits);

  bool test(QubitId q) const { return (bits[q >> 6] >> (q & 63)) & 1; }
  void flip(QubitId q) { bits[q >> 6] ^= uint64_t{1} << (q & 63); }
  void xor_with(const AffineFn& other);
  bool parity_zero() const;

  /// The same function with the constant bit stripped.
  AffineFn linear_part() const;

  bool operator==(const AffineFn&) const = default;
  std::strong_ordering operator<=>(const AffineFn& other) const;
};

struct PhaseTerm {
  AffineFn fn;
  Angle angle;
  int first_pos = -1;  // netlist position of the first contributing Rz
  QubitId wire = 0;
};

/// A {NOT, CNOT, Rz} subcircuit delimited by termination points.
struct Region {
  // Exclusive borders per encountered wire: gates at positions strictly
  // between the pair belong to the wire's window.
  std::unordered_map<QubitId, std::pair<int, int>> window;
  std::vector<QubitId> wires;                   // encounter order
  std::vector<int> members;                     // netlist positions, sorted
  std::vector<std::pair<QubitId, int>> anchors; // (wire, position)

  bool inside(QubitId w, int pos) const {
    auto it = window.find(w);
    return it != window.end() && it->second.first < pos && pos < it->second.second;
  }
};

/// Breadth-first region construction over anchor points, followed by the
/// pruning pass with its control-inside/target-outside exception.
/// `claimed[pos]` marks gates owned by earlier regions; they terminate
/// wire scans. `max_gates` (0 = uncapped) stops growth early.
Region find_region(const std::vector<Gate>& netlist, int num_qubits, int seed_pos,
                   const std::vector<char>& claimed, int max_gates = 0);

/// Convenience overload over a flat circuit with nothing claimed.
Region find_region(const Circuit& circuit, int seed_pos);

struct PhasePolynomial {
  std::vector<PhaseTerm> terms;                  // in order of appearance
  std::map<AffineFn, Angle> merged;              // terms accumulated by function
  std::unordered_map<QubitId, AffineFn> output;  // wire value at the end border
};

/// Simulates wire states through the region members: CNOT(a;b) xors states,
/// NOT flips the constant bit, Rz records a term at the wire's current value.
PhasePolynomial build_phase_polynomial(const Circuit& circuit, const Region& region);

/// Pushes NOT gates to the right end of a {NOT, CNOT, Rz} circuit:
///   NOT(a) CNOT(a;b) -> CNOT(a;b) NOT(a) NOT(b)
///   NOT(b) CNOT(a;b) -> CNOT(a;b) NOT(b)
///   NOT(a) Rz(a)     -> Rz'(a) NOT(a)
/// Adjacent NOT pairs cancel. Throws if the circuit has other gate kinds.
Circuit propagate_nots(const Circuit& circuit);

/// Routine 4: phase-polynomial rotation merging over greedily claimed
/// regions. Returns the drop in Rz count.
int merge_rotations(Dag& dag, int max_region_gates = 0);

}  // namespace qcopt
