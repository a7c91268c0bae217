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

#include "qcopt/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace qcopt {

namespace {

using cd = std::complex<double>;

// Qubit 0 is the most significant bit: its stride in the basis index is
// 2^(n-1-q) for qubit q.
size_t stride_of(int num_qubits, QubitId q) {
  return size_t{1} << (num_qubits - 1 - static_cast<int>(q));
}

void apply_gate(const Gate& g, int num_qubits, std::vector<cd>& state) {
  const size_t dim = state.size();
  switch (g.kind) {
    case GateKind::NOT: {
      const size_t s = stride_of(num_qubits, g.qubits[0]);
      for (size_t i = 0; i < dim; ++i) {
        if ((i & s) == 0) std::swap(state[i], state[i | s]);
      }
      break;
    }
    case GateKind::H: {
      const size_t s = stride_of(num_qubits, g.qubits[0]);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (size_t i = 0; i < dim; ++i) {
        if ((i & s) == 0) {
          cd a = state[i], b = state[i | s];
          state[i] = (a + b) * inv_sqrt2;
          state[i | s] = (a - b) * inv_sqrt2;
        }
      }
      break;
    }
    case GateKind::RZ: {
      if (g.angle.is_symbolic())
        throw std::domain_error("apply_circuit: symbolic Rz angle");
      const size_t s = stride_of(num_qubits, g.qubits[0]);
      const double half = g.angle.radians() / 2.0;
      const cd e0(std::cos(half), -std::sin(half));
      const cd e1(std::cos(half), std::sin(half));
      for (size_t i = 0; i < dim; ++i) state[i] *= (i & s) ? e1 : e0;
      break;
    }
    case GateKind::CNOT: {
      const size_t sc = stride_of(num_qubits, g.qubits[0]);
      const size_t st = stride_of(num_qubits, g.qubits[1]);
      for (size_t i = 0; i < dim; ++i) {
        if ((i & sc) && (i & st) == 0) std::swap(state[i], state[i | st]);
      }
      break;
    }
    case GateKind::TOFFOLI: {
      const size_t s0 = stride_of(num_qubits, g.qubits[0]);
      const size_t s1 = stride_of(num_qubits, g.qubits[1]);
      const size_t st = stride_of(num_qubits, g.qubits[2]);
      const bool n0 = g.neg_controls & 1, n1 = g.neg_controls & 2;
      for (size_t i = 0; i < dim; ++i) {
        const bool c0 = ((i & s0) != 0) != n0;
        const bool c1 = ((i & s1) != 0) != n1;
        if (c0 && c1 && (i & st) == 0) std::swap(state[i], state[i | st]);
      }
      break;
    }
  }
}

void column_state(const Circuit& circuit, size_t col, std::vector<cd>& state) {
  std::fill(state.begin(), state.end(), cd(0.0, 0.0));
  state[col] = cd(1.0, 0.0);
  for (const Gate& g : circuit.gates()) apply_gate(g, circuit.num_qubits(), state);
}

}  // namespace

void apply_circuit(const Circuit& circuit, std::vector<std::complex<double>>& state) {
  if (!circuit.is_flat()) throw std::invalid_argument("apply_circuit: circuit must be flat");
  const size_t dim = size_t{1} << circuit.num_qubits();
  if (state.size() != dim) throw std::invalid_argument("apply_circuit: state dimension mismatch");
  for (const Gate& g : circuit.gates()) apply_gate(g, circuit.num_qubits(), state);
}

DenseUnitary unitary(const Circuit& flat_or_blocked) {
  Circuit circuit = flat_or_blocked.is_flat() ? flat_or_blocked : expand_blocks(flat_or_blocked);
  if (circuit.num_qubits() > kMaxVerifyQubits)
    throw std::domain_error("unitary: too many qubits for dense verification");
  if (circuit.num_qubits() <= 0) throw std::domain_error("unitary: empty qubit set");
  const size_t dim = size_t{1} << circuit.num_qubits();
  DenseUnitary u;
  u.num_qubits = circuit.num_qubits();
  u.dim = dim;
  u.data.assign(dim * dim, cd(0.0, 0.0));
  std::vector<cd> state(dim);
  for (size_t col = 0; col < dim; ++col) {
    column_state(circuit, col, state);
    for (size_t row = 0; row < dim; ++row) u.at(row, col) = state[row];
  }
  return u;
}

EquivalenceResult equivalent_up_to_phase(const DenseUnitary& a, const DenseUnitary& b,
                                         double tol) {
  if (a.dim != b.dim) throw std::invalid_argument("equivalent_up_to_phase: dimension mismatch");
  cd phase(0.0, 0.0);
  bool have_phase = false;
  double max_dev = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) {
    if (!have_phase) {
      if (std::abs(a.data[i]) > tol && std::abs(b.data[i]) > tol) {
        phase = a.data[i] / b.data[i];
        phase /= std::abs(phase);
        have_phase = true;
      } else if (std::abs(a.data[i]) > tol || std::abs(b.data[i]) > tol) {
        // One side is (near) zero where the other is not.
        return {false, std::abs(a.data[i] - b.data[i])};
      }
      continue;
    }
    max_dev = std::max(max_dev, std::abs(a.data[i] - phase * b.data[i]));
  }
  if (!have_phase) return {true, 0.0};  // both numerically zero everywhere
  // Re-scan the prefix skipped while searching for the phase reference.
  for (size_t i = 0; i < a.data.size(); ++i) {
    double dev = std::abs(a.data[i] - phase * b.data[i]);
    max_dev = std::max(max_dev, dev);
  }
  return {max_dev <= tol, max_dev};
}

EquivalenceResult equivalent_up_to_phase(const Circuit& a_in, const Circuit& b_in, double tol) {
  Circuit a = a_in.is_flat() ? a_in : expand_blocks(a_in);
  Circuit b = b_in.is_flat() ? b_in : expand_blocks(b_in);
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("equivalent_up_to_phase: qubit count mismatch");
  if (a.num_qubits() > kMaxVerifyQubits)
    throw std::domain_error("equivalent_up_to_phase: too many qubits");
  const size_t dim = size_t{1} << a.num_qubits();
  std::vector<cd> sa(dim), sb(dim);
  cd phase(0.0, 0.0);
  bool have_phase = false;
  double max_dev = 0.0;
  for (size_t col = 0; col < dim; ++col) {
    column_state(a, col, sa);
    column_state(b, col, sb);
    for (size_t row = 0; row < dim; ++row) {
      if (!have_phase) {
        if (std::abs(sa[row]) > tol && std::abs(sb[row]) > tol) {
          phase = sa[row] / sb[row];
          phase /= std::abs(phase);
          have_phase = true;
          // Entries of this column before the reference were all near zero
          // on both sides; their deviation is bounded by 2*tol and is
          // re-checked below against the fixed phase.
          for (size_t r = 0; r <= row; ++r)
            max_dev = std::max(max_dev, std::abs(sa[r] - phase * sb[r]));
        } else {
          max_dev = std::max(max_dev, std::abs(sa[row] - sb[row]));
          if (max_dev > tol) return {false, max_dev};
        }
        continue;
      }
      max_dev = std::max(max_dev, std::abs(sa[row] - phase * sb[row]));
    }
  }
  return {max_dev <= tol, max_dev};
}

}  // namespace qcopt
