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

#include <random>

#include "doctest.h"
#include "qcopt/qc_io.hpp"
#include "qcopt/quipper_io.hpp"
#include "test_util.hpp"

using namespace qcopt;

TEST_CASE("parse_qc handles the basic grammar") {
  Circuit c = parse_qc(".v a b\nBEGIN\ntof a b\nEND\n");
  REQUIRE(c.num_qubits() == 2);
  REQUIRE(c.gates().size() == 1);
  CHECK(c.gates()[0] == make_cnot(0, 1));

  Circuit t = parse_qc(".v a\nBEGIN\nT* a\nEND\n");
  CHECK(t.gates()[0].angle.radians() == doctest::Approx(7.0 * kPi / 4.0));

  Circuit mix = parse_qc(
      ".v a b c\n.i a b\n.o a\n"
      "# comment line\n"
      "BEGIN\n"
      "H a\n"
      "X b  # trailing comment\n"
      "tof a\n"
      "tof a b c\n"
      "P c\n"
      "S* a\n"
      "Rz(0.25) b\n"
      "Z c\n"
      "END\n");
  GateCounts cc = counts(mix);
  CHECK(cc.h == 1);
  CHECK(cc.nots == 2);
  CHECK(cc.toffoli == 1);
  CHECK(cc.p_like == 2);
  CHECK(cc.rz_generic == 1);
  CHECK(cc.z_like == 1);
}

TEST_CASE("parse_qc reports errors with line numbers") {
  CHECK_THROWS_WITH_AS(parse_qc(".v a\nBEGIN\nH b\nEND\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_AS(parse_qc(".v a b\nBEGIN\nH a b\nEND\n"), ParseError);         // bad arity
  CHECK_THROWS_AS(parse_qc(".v a\nBEGIN\nRz(nope) a\nEND\n"), ParseError);      // bad angle
  CHECK_THROWS_AS(parse_qc(".v a b c\nBEGIN\nZ a b c\nEND\n"), ParseError);     // CCZ spelling
  CHECK_THROWS_AS(parse_qc(".v a\nBEGIN\nfrob a\nEND\n"), ParseError);          // unknown
  CHECK_THROWS_AS(parse_qc(".v a b\nBEGIN\ntof a a\nEND\n"), ParseError);       // repeated operand
}

TEST_CASE("qc blocks parse, repeat and expand") {
  Circuit c = parse_qc(
      ".v a b c\n"
      "BEGIN sub(2)\n"
      "H 0\n"
      "tof 0 1\n"
      "END\n"
      "BEGIN\n"
      "repeat 2 sub b c\n"
      "sub a b\n"
      "END\n");
  Circuit flat = expand_blocks(c);
  REQUIRE(flat.gates().size() == 6);
  CHECK(flat.gates()[0] == make_h(1));
  CHECK(flat.gates()[1] == make_cnot(1, 2));
  CHECK(flat.gates()[2] == make_h(1));
  CHECK(flat.gates()[4] == make_h(0));
  CHECK(flat.gates()[5] == make_cnot(0, 1));
}

TEST_CASE("emit_qc round-trips random circuits structurally") {
  std::mt19937 rng(123);
  testutil::RandomCircuitOptions opts;
  opts.num_qubits = 5;
  opts.num_gates = 40;
  opts.with_toffoli = false;  // negated controls have no .qc spelling
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c = testutil::random_circuit(rng, opts);
    Circuit back = parse_qc(emit_qc(c));
    REQUIRE(back.gates().size() == c.gates().size());
    for (size_t i = 0; i < c.gates().size(); ++i) CHECK(back.gates()[i] == c.gates()[i]);
  }
}

TEST_CASE("emit_qc uses mnemonics and 17-digit generic angles") {
  Circuit c(1);
  c.add(make_rz(0.3, 0));
  std::string text = emit_qc(c);
  CHECK(text.find("Rz(0.29999999999999999) q0") != std::string::npos);

  Circuit t(1);
  t.add(make_rz(kPi / 4.0, 0));
  CHECK(emit_qc(t).find("T q0") != std::string::npos);

  std::string empty_text = emit_qc(Circuit(1));
  CHECK(empty_text.find("BEGIN") != std::string::npos);
  CHECK(empty_text.find("END") != std::string::npos);

  Circuit sym(1);
  sym.add(make_rz(Angle::symbolic(0, 1), 0));
  CHECK_THROWS_AS(emit_qc(sym), std::domain_error);
}

TEST_CASE("qc parser fuzz: random token soup either throws ParseError or yields a valid circuit") {
  std::mt19937 rng(77);
  const char* words[] = {".v", "a",  "b",    "BEGIN", "END",  "H",      "T*",
                         "tof",  "Rz(", "0.5)", "repeat", "2",    "# hmm",  "P*",
                         "sub(2)", "\n"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    int len = 3 + static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) {
      text += words[rng() % (sizeof(words) / sizeof(words[0]))];
      text += (rng() % 4 == 0) ? "\n" : " ";
    }
    try {
      Circuit c = parse_qc(text);
      c.check_valid();  // must not produce an invariant-violating circuit
    } catch (const ParseError&) {
      // expected for malformed input
    }
  }
}

TEST_CASE("parse_quipper reads gates, controls and inverse markers") {
  Circuit h = parse_quipper("QGate[\"H\"](0) with nocontrol\n");
  REQUIRE(h.gates().size() == 1);
  CHECK(h.gates()[0] == make_h(0));

  Circuit tof = parse_quipper("QGate[\"not\"](2) with controls=[+0,-1]\n");
  REQUIRE(tof.gates().size() == 1);
  CHECK(tof.gates()[0].kind == GateKind::TOFFOLI);
  CHECK(tof.gates()[0].qubits[0] == 0);
  CHECK(tof.gates()[0].qubits[1] == 1);
  CHECK(tof.gates()[0].qubits[2] == 2);
  CHECK(tof.gates()[0].neg_controls == 0b10);

  Circuit prog = parse_quipper(
      "Inputs: 0:Qbit, 1:Qbit, 2:Qbit\n"
      "QGate[\"T\"]*(1) with nocontrol\n"
      "QGate[\"not\"](2) with controls=[+0]\n"
      "QGate[\"S\"](0)\n"
      "QInit0(3)\n"
      "Outputs: 0:Qbit, 1:Qbit, 2:Qbit\n");
  GateCounts c = counts(prog);
  CHECK(c.t_like == 1);
  CHECK(c.p_like == 1);
  CHECK(c.cnot == 1);

  CHECK_THROWS_WITH_AS(parse_quipper("QGate[\"V\"](0)\n"), doctest::Contains("V"),
                       std::runtime_error);
}

TEST_CASE("negatively controlled not expands to NOT plus CNOT") {
  Circuit c = parse_quipper("QGate[\"not\"](1) with controls=[-0]\n");
  REQUIRE(c.gates().size() == 2);
  // X on target iff control is 0 equals X(t) then CNOT(c;t).
  Circuit manual(2);
  manual.add(make_not(1));
  manual.add(make_cnot(0, 1));
  for (size_t i = 0; i < 2; ++i) CHECK(c.gates()[i] == manual.gates()[i]);
}
