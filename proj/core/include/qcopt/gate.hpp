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

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "qcopt/angle.hpp"

namespace qcopt {

using QubitId = uint32_t;

enum class GateKind : uint8_t { NOT, H, CNOT, RZ, TOFFOLI };

constexpr int arity_of(GateKind kind) {
  switch (kind) {
    case GateKind::NOT:
    case GateKind::H:
    case GateKind::RZ:
      return 1;
    case GateKind::CNOT:
      return 2;
    case GateKind::TOFFOLI:
      return 3;
  }
  return 0;
}

/// One circuit element. Operand order is controls before target.
/// `neg_controls` is a bitmask over the Toffoli control slots (bit 0 = first
/// control); it is zero for every other kind.
struct Gate {
  GateKind kind = GateKind::NOT;
  std::array<QubitId, 3> qubits{0, 0, 0};
  Angle angle;              // RZ only
  uint8_t neg_controls = 0; // TOFFOLI only

  int arity() const { return arity_of(kind); }
  std::span<const QubitId> operands() const { return {qubits.data(), static_cast<size_t>(arity())}; }

  QubitId target() const { return qubits[static_cast<size_t>(arity()) - 1]; }

  bool acts_on(QubitId q) const {
    for (QubitId op : operands())
      if (op == q) return true;
    return false;
  }

  bool operator==(const Gate& other) const {
    if (kind != other.kind || neg_controls != other.neg_controls) return false;
    for (int i = 0; i < arity(); ++i)
      if (qubits[i] != other.qubits[i]) return false;
    if (kind == GateKind::RZ && !angle.approx_equals(other.angle)) return false;
    return true;
  }
};

inline Gate make_not(QubitId q) { return Gate{GateKind::NOT, {q, 0, 0}, {}, 0}; }
inline Gate make_h(QubitId q) { return Gate{GateKind::H, {q, 0, 0}, {}, 0}; }
inline Gate make_rz(double radians, QubitId q) {
  return Gate{GateKind::RZ, {q, 0, 0}, Angle(radians), 0};
}
inline Gate make_rz(const Angle& angle, QubitId q) {
  return Gate{GateKind::RZ, {q, 0, 0}, angle, 0};
}
inline Gate make_cnot(QubitId control, QubitId target) {
  if (control == target) throw std::invalid_argument("cnot: operands must be distinct");
  return Gate{GateKind::CNOT, {control, target, 0}, {}, 0};
}
inline Gate make_toffoli(QubitId c0, QubitId c1, QubitId target, uint8_t neg_controls = 0) {
  if (c0 == c1 || c0 == target || c1 == target)
    throw std::invalid_argument("toffoli: operands must be distinct");
  return Gate{GateKind::TOFFOLI, {c0, c1, target}, {}, neg_controls};
}

}  // namespace qcopt
