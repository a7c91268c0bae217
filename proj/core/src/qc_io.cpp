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

#include "qcopt/qc_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace qcopt {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::optional<Angle> mnemonic_angle(const std::string& tok, int line) {
  if (tok == "T") return Angle(kPi / 4.0);
  if (tok == "T*") return Angle(7.0 * kPi / 4.0);
  if (tok == "P" || tok == "S") return Angle(kPi / 2.0);
  if (tok == "P*" || tok == "S*") return Angle(3.0 * kPi / 2.0);
  if (tok == "Z") return Angle(kPi);
  if (tok.starts_with("Rz(") && tok.ends_with(")")) {
    std::string num = tok.substr(3, tok.size() - 4);
    try {
      size_t used = 0;
      double value = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
      return Angle(value);
    } catch (const std::exception&) {
      throw ParseError(line, "malformed Rz angle '" + num + "'");
    }
  }
  return std::nullopt;
}

struct WireResolver {
  // Either named global qubits (main block) or numeric local wires (block
  // definitions, addressed 0..arity-1).
  const std::map<std::string, QubitId>* names = nullptr;
  int arity = 0;

  QubitId resolve(const std::string& tok, int line) const {
    if (names) {
      auto it = names->find(tok);
      if (it == names->end()) throw ParseError(line, "undeclared variable '" + tok + "'");
      return it->second;
    }
    int value = -1;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size() || value < 0 || value >= arity)
      throw ParseError(line, "bad block wire '" + tok + "'");
    return static_cast<QubitId>(value);
  }
};

std::optional<Gate> parse_gate_line(const std::vector<std::string>& tokens, int line,
                                    const WireResolver& wires) {
  const std::string& mn = tokens[0];
  auto need_arity = [&](size_t k) {
    if (tokens.size() != k + 1)
      throw ParseError(line, "'" + mn + "' expects " + std::to_string(k) + " operand(s)");
  };
  if (mn == "tof" || mn == "TOF") {
    if (tokens.size() < 2 || tokens.size() > 4)
      throw ParseError(line, "'tof' expects 1 to 3 operands");
    std::vector<QubitId> qs;
    for (size_t i = 1; i < tokens.size(); ++i) qs.push_back(wires.resolve(tokens[i], line));
    try {
      if (qs.size() == 1) return make_not(qs[0]);
      if (qs.size() == 2) return make_cnot(qs[0], qs[1]);
      return make_toffoli(qs[0], qs[1], qs[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  if (mn == "H") {
    need_arity(1);
    return make_h(wires.resolve(tokens[1], line));
  }
  if (mn == "X") {
    need_arity(1);
    return make_not(wires.resolve(tokens[1], line));
  }
  if (auto angle = mnemonic_angle(mn, line)) {
    // Multi-operand Z (a CCZ spelling in some dialects) is rejected.
    need_arity(1);
    return make_rz(*angle, wires.resolve(tokens[1], line));
  }
  return std::nullopt;  // not a gate line; caller may treat as block call
}

}  // namespace

Circuit parse_qc(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::vector<std::string> names;
  std::map<std::string, QubitId> name_ids;
  std::map<std::string, int> block_ids;

  Circuit circuit;
  bool have_vars = false;
  bool main_seen = false;

  enum class Section { Header, InMain, InBlock, Done };
  Section section = Section::Header;
  BlockDef current_block;

  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (section == Section::Header) {
      if (head == ".v") {
        for (size_t i = 1; i < tokens.size(); ++i) {
          if (name_ids.contains(tokens[i]))
            throw ParseError(line_no, "duplicate variable '" + tokens[i] + "'");
          name_ids[tokens[i]] = static_cast<QubitId>(names.size());
          names.push_back(tokens[i]);
        }
        have_vars = true;
        circuit.set_num_qubits(static_cast<int>(names.size()));
        circuit.set_qubit_names(names);
        continue;
      }
      if (head[0] == '.') continue;  // .i/.o and other directives: accepted, not used
      if (head == "BEGIN") {
        if (!have_vars) throw ParseError(line_no, "BEGIN before .v declaration");
        if (tokens.size() == 1) {
          section = Section::InMain;
          main_seen = true;
        } else {
          // BEGIN name(arity)
          const std::string& decl = tokens[1];
          auto open = decl.find('(');
          if (open == std::string::npos || !decl.ends_with(")"))
            throw ParseError(line_no, "expected BEGIN name(arity)");
          std::string bname = decl.substr(0, open);
          std::string num = decl.substr(open + 1, decl.size() - open - 2);
          int arity = -1;
          auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), arity);
          if (ec != std::errc() || p != num.data() + num.size() || arity <= 0)
            throw ParseError(line_no, "bad block arity '" + num + "'");
          if (block_ids.contains(bname))
            throw ParseError(line_no, "duplicate block '" + bname + "'");
          current_block = BlockDef{bname, arity, {}};
          section = Section::InBlock;
        }
        continue;
      }
      throw ParseError(line_no, "unexpected token '" + head + "' before BEGIN");
    }

    if (section == Section::InBlock) {
      if (head == "END") {
        block_ids[current_block.name] = circuit.add_block(current_block);
        section = Section::Header;
        continue;
      }
      WireResolver wires{nullptr, current_block.arity};
      auto gate = parse_gate_line(tokens, line_no, wires);
      if (!gate) throw ParseError(line_no, "unknown mnemonic '" + head + "' in block");
      current_block.body.push_back(*gate);
      continue;
    }

    if (section == Section::InMain) {
      if (head == "END") {
        section = Section::Done;
        continue;
      }
      WireResolver wires{&name_ids, 0};
      // Block invocation, optionally `repeat <k> <name> <actuals...>`.
      size_t first = 0;
      int repeat = 1;
      if (head == "repeat") {
        if (tokens.size() < 3) throw ParseError(line_no, "repeat expects a count and a block");
        auto [p, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), repeat);
        if (ec != std::errc() || repeat < 1) throw ParseError(line_no, "bad repeat count");
        first = 2;
      }
      if (first == 0) {
        auto gate = parse_gate_line(tokens, line_no, wires);
        if (gate) {
          circuit.add(*gate);
          continue;
        }
        if (!block_ids.contains(head))
          throw ParseError(line_no, "unknown mnemonic or block '" + head + "'");
        first = 0;
      }
      const std::string& bname = tokens[first];
      auto it = block_ids.find(bname);
      if (it == block_ids.end()) throw ParseError(line_no, "unknown block '" + bname + "'");
      std::vector<QubitId> actuals;
      for (size_t i = first + 1; i < tokens.size(); ++i)
        actuals.push_back(wires.resolve(tokens[i], line_no));
      try {
        circuit.add_call(it->second, repeat, std::move(actuals));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    if (section == Section::Done) {
      throw ParseError(line_no, "content after END");
    }
  }
  if (!have_vars) throw ParseError(line_no, "missing .v declaration");
  if (!main_seen) throw ParseError(line_no, "missing main BEGIN/END block");
  return circuit;
}

namespace {

std::string angle_mnemonic(const Angle& angle) {
  if (angle.is_symbolic()) throw std::domain_error("emit_qc: symbolic angle");
  const double r = angle.radians();
  auto near = [&](double x) { return std::fabs(r - x) < kAngleEps; };
  if (near(kPi / 4.0)) return "T";
  if (near(7.0 * kPi / 4.0)) return "T*";
  if (near(kPi / 2.0)) return "P";
  if (near(3.0 * kPi / 2.0)) return "P*";
  if (near(kPi)) return "Z";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "Rz(%.17g)", r);
  return buf;
}

void emit_gate(std::ostringstream& out, const Gate& g,
               const std::vector<std::string>& wire_names) {
  auto name = [&](QubitId q) -> const std::string& { return wire_names[q]; };
  switch (g.kind) {
    case GateKind::H:
      out << "H " << name(g.qubits[0]);
      break;
    case GateKind::NOT:
      out << "X " << name(g.qubits[0]);
      break;
    case GateKind::RZ:
      out << angle_mnemonic(g.angle) << ' ' << name(g.qubits[0]);
      break;
    case GateKind::CNOT:
      out << "tof " << name(g.qubits[0]) << ' ' << name(g.qubits[1]);
      break;
    case GateKind::TOFFOLI:
      if (g.neg_controls != 0)
        throw std::domain_error("emit_qc: negated Toffoli controls have no .qc spelling");
      out << "tof " << name(g.qubits[0]) << ' ' << name(g.qubits[1]) << ' ' << name(g.qubits[2]);
      break;
  }
  out << '\n';
}

}  // namespace

std::string emit_qc(const Circuit& circuit) {
  std::ostringstream out;
  std::vector<std::string> names = circuit.qubit_names();
  if (static_cast<int>(names.size()) != circuit.num_qubits()) {
    names.clear();
    for (int i = 0; i < circuit.num_qubits(); ++i) names.push_back("q" + std::to_string(i));
  }
  out << ".v";
  for (const auto& n : names) out << ' ' << n;
  out << "\n.i";
  for (const auto& n : names) out << ' ' << n;
  out << "\n.o";
  for (const auto& n : names) out << ' ' << n;
  out << "\n\n";

  // Block bodies address wires numerically.
  std::vector<std::string> numeric;
  for (const BlockDef& def : circuit.blocks()) {
    numeric.clear();
    for (int i = 0; i < def.arity; ++i) numeric.push_back(std::to_string(i));
    out << "BEGIN " << def.name << '(' << def.arity << ")\n";
    for (const Gate& g : def.body) emit_gate(out, g, numeric);
    out << "END\n\n";
  }

  out << "BEGIN\n";
  size_t call_idx = 0;
  const auto& calls = circuit.calls();
  const auto& gates = circuit.gates();
  for (size_t pos = 0; pos <= gates.size(); ++pos) {
    while (call_idx < calls.size() && calls[call_idx].gate_offset == pos) {
      const BlockCall& call = calls[call_idx];
      if (call.repeat != 1) out << "repeat " << call.repeat << ' ';
      out << circuit.blocks()[static_cast<size_t>(call.block)].name;
      for (QubitId q : call.actuals) out << ' ' << names[q];
      out << '\n';
      ++call_idx;
    }
    if (pos < gates.size()) emit_gate(out, gates[pos], names);
  }
  out << "END\n";
  return out.str();
}

}  // namespace qcopt
