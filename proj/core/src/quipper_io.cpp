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

#include "qcopt/quipper_io.hpp"

#include <algorithm>
#include <sstream>

#include "qcopt/qc_io.hpp"

namespace qcopt {

namespace {

struct QuipperGate {
  std::string name;
  bool inverse = false;
  int target = -1;
  std::vector<std::pair<int, bool>> controls;  // (wire, negated)
};

// QGate["name"](t) [with controls=[+a,-b]] [with nocontrol]
bool parse_qgate_line(const std::string& line, int line_no, QuipperGate& out) {
  size_t p = line.find("QGate[\"");
  if (p == std::string::npos) return false;
  p += 7;
  size_t q = line.find('"', p);
  if (q == std::string::npos) throw ParseError(line_no, "unterminated gate name");
  out.name = line.substr(p, q - p);
  size_t cursor = q + 1;
  if (cursor >= line.size() || line[cursor] != ']')
    throw ParseError(line_no, "expected ']' after gate name");
  ++cursor;
  if (cursor < line.size() && line[cursor] == '*') {
    out.inverse = true;
    ++cursor;
  }
  if (cursor >= line.size() || line[cursor] != '(')
    throw ParseError(line_no, "expected '(' after gate name");
  size_t close = line.find(')', cursor);
  if (close == std::string::npos) throw ParseError(line_no, "unterminated operand list");
  out.target = std::stoi(line.substr(cursor + 1, close - cursor - 1));
  size_t ctrl = line.find("controls=[", close);
  if (ctrl != std::string::npos) {
    size_t end = line.find(']', ctrl);
    if (end == std::string::npos) throw ParseError(line_no, "unterminated control list");
    std::string body = line.substr(ctrl + 10, end - ctrl - 10);
    std::istringstream cs(body);
    std::string item;
    while (std::getline(cs, item, ',')) {
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      if (item.empty()) continue;
      bool neg = item[0] == '-';
      int wire = std::stoi(neg || item[0] == '+' ? item.substr(1) : item);
      out.controls.emplace_back(wire, neg);
    }
  }
  return true;
}

}  // namespace

Circuit parse_quipper(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<QuipperGate> parsed;
  int max_wire = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find("QGate") == std::string::npos) continue;  // headers, QInit/QTerm, comments
    QuipperGate g;
    if (!parse_qgate_line(line, line_no, g)) continue;
    max_wire = std::max(max_wire, g.target);
    for (auto& [w, neg] : g.controls) max_wire = std::max(max_wire, w);
    parsed.push_back(std::move(g));
  }

  Circuit circuit(max_wire + 1);
  for (size_t i = 0; i < parsed.size(); ++i) {
    const QuipperGate& g = parsed[i];
    auto tgt = static_cast<QubitId>(g.target);
    if (g.name == "not" || g.name == "X" || g.name == "x") {
      if (g.controls.empty()) {
        circuit.add(make_not(tgt));
      } else if (g.controls.size() == 1) {
        auto [c, neg] = g.controls[0];
        // A negated control on a CNOT has no native form; X on the target
        // conditioned on c=0 equals NOT(t) followed by CNOT(c;t).
        if (neg) circuit.add(make_not(tgt));
        circuit.add(make_cnot(static_cast<QubitId>(c), tgt));
      } else if (g.controls.size() == 2) {
        uint8_t mask = 0;
        if (g.controls[0].second) mask |= 1;
        if (g.controls[1].second) mask |= 2;
        circuit.add(make_toffoli(static_cast<QubitId>(g.controls[0].first),
                                 static_cast<QubitId>(g.controls[1].first), tgt, mask));
      } else {
        throw std::runtime_error("parse_quipper: unsupported control count for 'not'");
      }
      continue;
    }
    if (!g.controls.empty())
      throw std::runtime_error("parse_quipper: unsupported controlled gate \"" + g.name + "\"");
    if (g.name == "H") {
      circuit.add(make_h(tgt));
    } else if (g.name == "T") {
      circuit.add(make_rz(g.inverse ? 7.0 * kPi / 4.0 : kPi / 4.0, tgt));
    } else if (g.name == "S" || g.name == "P") {
      circuit.add(make_rz(g.inverse ? 3.0 * kPi / 2.0 : kPi / 2.0, tgt));
    } else if (g.name == "Z") {
      circuit.add(make_rz(kPi, tgt));
    } else {
      throw std::runtime_error("parse_quipper: unsupported gate \"" + g.name + "\"");
    }
  }
  return circuit;
}

}  // namespace qcopt
