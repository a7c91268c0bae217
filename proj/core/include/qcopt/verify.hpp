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

#include <complex>
#include <vector>

#include "qcopt/circuit.hpp"

namespace qcopt {

inline constexpr int kMaxVerifyQubits = 12;

/// Dense 2^n x 2^n unitary, row-major. Qubit 0 is the most significant bit
/// of the basis index.
struct DenseUnitary {
  int num_qubits = 0;
  size_t dim = 0;
  std::vector<std::complex<double>> data;  // data[row * dim + col]

  std::complex<double>& at(size_t row, size_t col) { return data[row * dim + col]; }
  const std::complex<double>& at(size_t row, size_t col) const { return data[row * dim + col]; }
};

/// Applies `circuit` to a state vector in place (dimension 2^num_qubits).
void apply_circuit(const Circuit& circuit, std::vector<std::complex<double>>& state);

/// Builds the full unitary (product of gate matrices in netlist order).
/// Requires concrete angles and at most kMaxVerifyQubits qubits.
DenseUnitary unitary(const Circuit& circuit);

struct EquivalenceResult {
  bool equivalent = false;
  double max_deviation = 0.0;
};

/// True iff U1 == e^{i phi} U2 entrywise within `tol`, with phi fixed from
/// the first entry pair of magnitude > tol. Works column-by-column, so no
/// full matrices are materialized.
EquivalenceResult equivalent_up_to_phase(const Circuit& a, const Circuit& b, double tol = 1e-8);

EquivalenceResult equivalent_up_to_phase(const DenseUnitary& a, const DenseUnitary& b,
                                         double tol = 1e-8);

}  // namespace qcopt
