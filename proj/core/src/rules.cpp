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

#include "qcopt/rules.hpp"

#include <map>
#include <sstream>

#include "qcopt/qc_io.hpp"
#include "qcopt/verify.hpp"

namespace qcopt {

namespace {

constexpr int kMaxRuleWires = 3;

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

Gate parse_rule_gate(const std::vector<std::string>& tokens, int line_no,
                     std::map<std::string, QubitId>& wires) {
  auto wire = [&](const std::string& tok) -> QubitId {
    auto it = wires.find(tok);
    if (it != wires.end()) return it->second;
    if (static_cast<int>(wires.size()) >= kMaxRuleWires)
      throw ParseError(line_no, "rule uses more than 3 wires");
    QubitId id = static_cast<QubitId>(wires.size());
    wires.emplace(tok, id);
    return id;
  };
  const std::string& mn = tokens[0];
  auto expect = [&](size_t k) {
    if (tokens.size() != k + 1) throw ParseError(line_no, "bad operand count for '" + mn + "'");
  };
  if (mn == "tof") {
    if (tokens.size() == 3) return make_cnot(wire(tokens[1]), wire(tokens[2]));
    if (tokens.size() == 2) return make_not(wire(tokens[1]));
    throw ParseError(line_no, "rule 'tof' supports 1 or 2 operands");
  }
  if (mn == "H") {
    expect(1);
    return make_h(wire(tokens[1]));
  }
  if (mn == "X") {
    expect(1);
    return make_not(wire(tokens[1]));
  }
  double angle;
  if (mn == "T") angle = kPi / 4.0;
  else if (mn == "T*") angle = 7.0 * kPi / 4.0;
  else if (mn == "P" || mn == "S") angle = kPi / 2.0;
  else if (mn == "P*" || mn == "S*") angle = 3.0 * kPi / 2.0;
  else if (mn == "Z") angle = kPi;
  else if (mn.starts_with("Rz(") && mn.ends_with(")")) {
    try {
      angle = std::stod(mn.substr(3, mn.size() - 4));
    } catch (const std::exception&) {
      throw ParseError(line_no, "malformed Rz angle in rule");
    }
  } else {
    throw ParseError(line_no, "unknown rule mnemonic '" + mn + "'");
  }
  expect(1);
  return make_rz(angle, wire(tokens[1]));
}

void certify_rule(const RewriteRule& rule) {
  Circuit lhs(rule.num_wires), rhs(rule.num_wires);
  for (const Gate& g : rule.pattern) lhs.add(g);
  for (const Gate& g : rule.replacement) rhs.add(g);
  auto r = equivalent_up_to_phase(lhs, rhs, 1e-12);
  if (!r.equivalent)
    throw std::runtime_error("rule '" + rule.name + "' failed unitary verification (deviation " +
                             std::to_string(r.max_deviation) + ")");
  if (rule.kind == RuleKind::REDUCING && rule.replacement.size() > rule.pattern.size())
    throw std::runtime_error("rule '" + rule.name + "' marked REDUCING but grows the circuit");
  if (rule.kind == RuleKind::PRESERVING && rule.replacement.size() != rule.pattern.size())
    throw std::runtime_error("rule '" + rule.name + "' marked PRESERVING but changes gate count");
}

}  // namespace

std::vector<RewriteRule> parse_rule_library(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<RewriteRule> rules;

  RewriteRule cur;
  std::map<std::string, QubitId> wires;
  bool in_rule = false, in_replacement = false;

  auto finish = [&]() {
    if (!in_rule) return;
    if (!in_replacement)
      throw std::runtime_error("rule '" + cur.name + "' has no '---' separator");
    cur.num_wires = static_cast<int>(wires.size());
    for (const Gate& g : cur.replacement)
      for (QubitId q : g.operands())
        if (static_cast<int>(q) >= cur.num_wires)
          throw std::runtime_error("rule '" + cur.name + "' replacement uses unknown wire");
    certify_rule(cur);
    rules.push_back(cur);
    cur = RewriteRule{};
    wires.clear();
    in_rule = in_replacement = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      finish();
      continue;
    }
    if (tokens[0] == "RULE") {
      finish();
      if (tokens.size() != 3) throw ParseError(line_no, "expected RULE <name> <kind>");
      cur.name = tokens[1];
      if (tokens[2] == "PRESERVING") cur.kind = RuleKind::PRESERVING;
      else if (tokens[2] == "REDUCING") cur.kind = RuleKind::REDUCING;
      else throw ParseError(line_no, "rule kind must be PRESERVING or REDUCING");
      in_rule = true;
      in_replacement = false;
      continue;
    }
    if (!in_rule) throw ParseError(line_no, "gate line outside a RULE stanza");
    if (tokens[0] == "---") {
      if (in_replacement) throw ParseError(line_no, "duplicate '---'");
      in_replacement = true;
      continue;
    }
    Gate g = parse_rule_gate(tokens, line_no, wires);
    (in_replacement ? cur.replacement : cur.pattern).push_back(g);
  }
  finish();
  return rules;
}

const std::string& seed_rule_library_text() {
  static const std::string text = R"(# qcopt seed rewrite rules.
# Wires are bound by first use; every rule is unitarily verified on load.

RULE cnot-not-cnot REDUCING
tof a b
X a
tof a b
---
X a
X b

RULE cnot-z-cnot REDUCING
tof a b
Z b
tof a b
---
Z a
Z b

RULE cnot-chain-left REDUCING
tof a b
tof b c
tof a b
---
tof b c
tof a c

RULE cnot-chain-right REDUCING
tof b c
tof a b
tof b c
---
tof a b
tof a c

RULE not-conj-t REDUCING
X a
T a
X a
---
T* a

RULE not-conj-tdag REDUCING
X a
T* a
X a
---
T a

RULE not-conj-p REDUCING
X a
P a
X a
---
P* a

RULE not-conj-pdag REDUCING
X a
P* a
X a
---
P a

RULE not-conj-z REDUCING
X a
Z a
X a
---
Z a

RULE hh-cancel REDUCING
H a
H a
---

RULE xx-cancel REDUCING
X a
X a
---

RULE swap-reorient PRESERVING
tof a b
tof b a
tof a b
---
tof b a
tof a b
tof b a

RULE not-past-target PRESERVING
X b
tof a b
---
tof a b
X b
)";
  return text;
}

const std::vector<RewriteRule>& seed_rules() {
  static const std::vector<RewriteRule> rules = parse_rule_library(seed_rule_library_text());
  return rules;
}

}  // namespace qcopt
