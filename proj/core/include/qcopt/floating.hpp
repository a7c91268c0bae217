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

#include <map>

#include "qcopt/phase_poly.hpp"
#include "qcopt/rules.hpp"

namespace qcopt {

/// A phase term tracked as a set of candidate placements instead of a fixed
/// gate. The key is the linear part of the observed affine function; the
/// recorded angle is pre-negated when the function was complemented.
struct FloatTerm {
  AffineFn key;
  Angle angle;
};

/// A {CNOT, NOT} skeleton plus floating Rz terms. The skeleton lives in its
/// own DAG so cancellations and rewrites splice locally.
struct FloatingRegion {
  Dag skeleton;
  std::vector<FloatTerm> terms;

  explicit FloatingRegion(int num_qubits) : skeleton(num_qubits) {}
  long long cnot_count() const;
};

/// One candidate placement: the value holds on `wire` right after
/// `after_node` (Dag::kBoundary for the wire head). `complemented` marks
/// locations carrying the complemented function; an Rz placed there needs
/// the negated angle.
struct FloatLocation {
  int after_node = Dag::kBoundary;
  QubitId wire = 0;
  bool complemented = false;
  int order = -1;  // topological position of the writing gate; -1 = head
  bool operator<(const FloatLocation& o) const {
    if (order != o.order) return order < o.order;
    return wire < o.wire;
  }
};

/// Builds a floating region from a flat {NOT, CNOT, Rz} circuit (used by
/// tests and by the routine 5 driver after region extraction).
FloatingRegion floating_region_from_circuit(const Circuit& circuit);

/// Complete location inventory from the wire-state simulation, keyed by the
/// linear part of each wire value.
std::map<AffineFn, std::vector<FloatLocation>> enumerate_placements(const FloatingRegion& region);

/// Two-qubit cancellation with floatable Rz gates: a CNOT pair cancels only
/// if every term keeps at least one candidate location. Returns removed gates.
int cancel_two_qubit_floating(FloatingRegion& region);

/// Gate-count-preserving rewrites, committed only when they unlock further
/// CNOT cancellations. Returns the CNOTs removed by those cancellations.
int apply_preserving_rules(FloatingRegion& region, const std::vector<RewriteRule>& rules);

/// Gate-count-reducing rewrites, applied on sight (kept only if every
/// floating term still has a candidate). Returns gates removed.
int apply_reducing_rules(FloatingRegion& region, const std::vector<RewriteRule>& rules);

/// Materializes every floating term at its first surviving candidate.
Circuit materialize(const FloatingRegion& region);

/// Routine 5 over greedily claimed regions. Returns net gates removed.
int routine5(Dag& dag, const std::vector<RewriteRule>& rules, int max_region_gates = 0);

}  // namespace qcopt
