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
#include <random>
#include <vector>

#include "qcopt/circuit.hpp"
#include "qcopt/verify.hpp"

namespace qcopt::testutil {

struct RandomCircuitOptions {
  int num_qubits = 4;
  int num_gates = 50;
  bool clifford_angles = true;  // mix in k*pi/4 rotations alongside continuous ones
  bool with_toffoli = false;
  double h_weight = 0.2;
};

inline Circuit random_circuit(std::mt19937& rng, const RandomCircuitOptions& opts) {
  Circuit c(opts.num_qubits);
  std::uniform_int_distribution<int> qubit(0, opts.num_qubits - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<int> eighth(-7, 7);
  for (int i = 0; i < opts.num_gates; ++i) {
    double r = unit(rng);
    if (r < opts.h_weight) {
      c.add(make_h(static_cast<QubitId>(qubit(rng))));
    } else if (r < opts.h_weight + 0.15) {
      c.add(make_not(static_cast<QubitId>(qubit(rng))));
    } else if (r < opts.h_weight + 0.45) {
      double theta = (opts.clifford_angles && unit(rng) < 0.6)
                         ? eighth(rng) * kPi / 4.0
                         : angle(rng);
      c.add(make_rz(theta, static_cast<QubitId>(qubit(rng))));
    } else if (opts.with_toffoli && r > 0.93 && opts.num_qubits >= 3) {
      int a = qubit(rng), b = qubit(rng), t = qubit(rng);
      while (b == a) b = qubit(rng);
      while (t == a || t == b) t = qubit(rng);
      c.add(make_toffoli(static_cast<QubitId>(a), static_cast<QubitId>(b),
                         static_cast<QubitId>(t),
                         static_cast<uint8_t>(rng() & 3)));
    } else {
      int a = qubit(rng), b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add(make_cnot(static_cast<QubitId>(a), static_cast<QubitId>(b)));
    }
  }
  return c;
}

/// Dense Hermitian-matrix exponential exp(-i H t) by scaling and squaring
/// with a Taylor core. Test-only oracle for small dimensions.
inline std::vector<std::complex<double>> expm_minus_i(
    const std::vector<std::complex<double>>& h, size_t dim, double t) {
  using cd = std::complex<double>;
  double norm = 0.0;
  for (size_t r = 0; r < dim; ++r) {
    double row = 0.0;
    for (size_t c = 0; c < dim; ++c) row += std::abs(h[r * dim + c]);
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double scale = norm * std::abs(t);
  while (scale > 0.5) {
    scale /= 2.0;
    ++squarings;
  }
  double dt = t / std::pow(2.0, squarings);
  std::vector<cd> result(dim * dim, cd(0, 0));
  for (size_t i = 0; i < dim; ++i) result[i * dim + i] = cd(1, 0);
  std::vector<cd> term = result, next(dim * dim);
  for (int k = 1; k <= 24; ++k) {
    cd factor = cd(0, -dt) / static_cast<double>(k);
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        cd acc(0, 0);
        for (size_t m = 0; m < dim; ++m) acc += term[r * dim + m] * h[m * dim + c];
        next[r * dim + c] = acc * factor;
      }
    term = next;
    for (size_t i = 0; i < dim * dim; ++i) result[i] += term[i];
  }
  for (int s = 0; s < squarings; ++s) {
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        cd acc(0, 0);
        for (size_t m = 0; m < dim; ++m) acc += result[r * dim + m] * result[m * dim + c];
        next[r * dim + c] = acc;
      }
    result = next;
  }
  return result;
}

}  // namespace qcopt::testutil
