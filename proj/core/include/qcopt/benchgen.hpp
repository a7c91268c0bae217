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

#include "qcopt/circuit.hpp"

namespace qcopt {

/// Approximate QFT on n qubits (qubit 0 = most significant). Controlled
/// phases CP(2*pi/2^k) expand to 2 CNOTs and 3 Rz; rotations with angle at
/// most pi/2^cutoff_exponent are omitted before counting. No terminal swaps.
Circuit gen_qft(int n, int cutoff_exponent = 13);

/// QFT-based in-place adder on 2n qubits: |a>|b> -> |a>|a+b mod 2^n> with
/// a on qubits 0..n-1 and b on qubits n..2n-1. Uses the approximate QFT,
/// an n(n+1)/2-CP phase-addition stage, and the inverse QFT.
Circuit gen_qfa(int n, int cutoff_exponent = 13);

/// k-controlled NOT from 2k-3 Toffolis with k-2 clean ancillas.
/// Layout: controls 0..k-1, ancillas k..2k-3, target 2k-2.
Circuit gen_toffoli_nc(int k);

/// k-controlled NOT in the borrowed-ancilla style: 4(k-2) Toffolis over
/// k controls, k-2 dirty ancillas and the target (same layout as above).
Circuit gen_toffoli_barenco(int k);

/// Heisenberg-chain product-formula benchmark: one-dimensional model with
/// periodic boundaries and a random site field drawn uniformly from [-1,1].
struct PfSpec {
  int n = 4;
  int order = 2;  // 1, 2, 4 or 6
  int trotter_steps = 1;
  double time = 1.0;
  unsigned field_seed = 0;
};

struct PfCircuit {
  Circuit block;    // one Trotter step
  int repetitions;  // trotter_steps
};

/// Compiles one Trotter step. Each two-qubit Pauli exponential lowers to a
/// CNOT-conjugated z-rotation (XX and YY via basis-change single-qubit
/// gates); fields become bare Rz. Orders above 1 use the Suzuki recursion.
PfCircuit gen_product_formula(const PfSpec& spec);

/// The field values the generator draws for a seed (test hook).
std::vector<double> pf_field_values(const PfSpec& spec);

}  // namespace qcopt
