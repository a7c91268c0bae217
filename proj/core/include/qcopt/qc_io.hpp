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

#include <stdexcept>
#include <string>

#include "qcopt/circuit.hpp"

namespace qcopt {

/// Parse failure; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the .qc dialect:
///   .v/.i/.o headers, `#` comments, gate lines (H, X, Z, T, T*, P, P*, S,
///   S*, Rz(<decimal>), tof), block definitions `BEGIN name(arity)` ... `END`
///   whose bodies address wires by index 0..arity-1, the main `BEGIN`/`END`
///   block, and block invocations `[repeat <k>] <name> <qubits...>`.
Circuit parse_qc(const std::string& text);

/// Emits parseable .qc text. Clifford-classified rotations use the named
/// mnemonics (T, T*, P, P*, Z); generic angles print as Rz(<%.17g float>).
/// Throws std::domain_error on symbolic angles.
std::string emit_qc(const Circuit& circuit);

}  // namespace qcopt
