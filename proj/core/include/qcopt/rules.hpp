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
#include <vector>

#include "qcopt/circuit.hpp"

namespace qcopt {

enum class RuleKind { PRESERVING, REDUCING };

/// A verified pattern -> replacement pair over at most 3 template wires.
/// Loaded rules are certified unitarily equivalent up to global phase at
/// tolerance 1e-12 before use.
struct RewriteRule {
  std::string name;
  RuleKind kind = RuleKind::REDUCING;
  int num_wires = 0;
  std::vector<Gate> pattern;      // wires 0..num_wires-1
  std::vector<Gate> replacement;  // wires drawn from the pattern's set
};

/// Parses a rule-library file. Stanzas:
///   RULE <name> <PRESERVING|REDUCING>
///   <pattern gate lines, wires named by letters>
///   ---
///   <replacement gate lines>
///   <blank line>
/// Every rule is verified on load; unverifiable rules raise std::runtime_error
/// naming the rule.
std::vector<RewriteRule> parse_rule_library(const std::string& text);

/// The built-in rule library text (also shipped under rules/seed_rules.qcr).
const std::string& seed_rule_library_text();

/// Parsed and certified seed library.
const std::vector<RewriteRule>& seed_rules();

}  // namespace qcopt
