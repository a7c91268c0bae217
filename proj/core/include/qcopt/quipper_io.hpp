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

#include <string>

#include "qcopt/circuit.hpp"

namespace qcopt {

/// Reads a simplified Quipper ASCII dump: lines of the form
///   QGate["<name>"](<int>) [with controls=[+a,-b,...]] [with nocontrol]
/// with an optional trailing `*` after the bracket for inverse gates.
/// Inputs/Outputs/QInit/QTerm/comment lines are skipped. Supported names:
/// not, X, H, T, S, P, Z. A negatively-controlled not expands to NOT+CNOT.
Circuit parse_quipper(const std::string& text);

}  // namespace qcopt
