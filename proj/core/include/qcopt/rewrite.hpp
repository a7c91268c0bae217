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

#include "qcopt/dag.hpp"

namespace qcopt {

/// Shared knobs for the cancellation walks. window == 0 leaves the
/// commutation search horizon unbounded.
struct RewriteOptions {
  int max_commute_window = 0;
};

/// Hadamard gate reduction (one left-to-right pass over H gates).
/// Applies, in place:
///   (a) H(a)H(b) CNOT(a;b) H(a)H(b)      -> CNOT(b;a)
///   (b) H P H                            -> P* H P*
///   (c) H P* H                           -> P H P
///   (d) H(b)P(b) [CNOTs targeting b] P*(b)H(b) -> P*(b) [CNOTs] P(b)
///   (e) mirror of (d) with P <-> P*
/// Returns the drop in H count. Never increases h or cnot, and never
/// increases the total gate count.
int reduce_hadamards(Dag& dag);

/// Outcome of a single commutation step for an Rz mover on its wire.
struct RzHop {
  int past_node;  // last node of the matched block
  int next;       // node just beyond the block (kBoundary at the wire end)
};

/// Checks whether the gates starting at `at` on wire q match one of the Rz
/// commutation patterns (CNOT control; H-CNOT-H; CNOT-Rz-CNOT). `at` is the
/// candidate blocking node. Returns the hop or nullopt.
std::optional<RzHop> rz_commute_step(const Dag& dag, int at, QubitId q);

/// Single-qubit gate cancellation (Routine 2): cancels adjacent self-inverse
/// pairs (H, NOT) and merges Rz chains discovered through commutation.
/// Returns the number of gates removed.
int cancel_single_qubit(Dag& dag, const RewriteOptions& opts = {});

/// Merges two Rz gates on the same wire; the combined rotation replaces g2
/// (the reached gate) and g1 is deleted. A merged angle of zero deletes both.
/// Returns the number of gates removed (1 or 2).
int merge_adjacent_rz(Dag& dag, int g1, int g2);

/// Two-qubit gate cancellation (Routine 3): CNOT pairs discovered by
/// commuting along both wires simultaneously. Returns gates removed.
int cancel_two_qubit(Dag& dag, const RewriteOptions& opts = {});

/// Exhaustively certifies the built-in commutation patterns and Hadamard
/// identities against the unitary oracle at tolerance 1e-12.
/// Throws std::logic_error if any pattern fails.
void verify_builtin_patterns();

}  // namespace qcopt
