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
#include "qcopt/circuit.hpp"
#include "qcopt/verify.hpp"
#include "test_util.hpp"

using namespace qcopt;

TEST_CASE("counts tallies per kind") {
  Circuit empty(3);
  GateCounts ce = counts(empty);
  CHECK(ce.total() == 0);

  Circuit c(2);
  c.add(make_h(0));
  c.add(make_h(1));
  c.add(make_cnot(0, 1));
  GateCounts cc = counts(c);
  CHECK(cc.h == 2);
  CHECK(cc.cnot == 1);
  CHECK(cc.total() == 3);
}

TEST_CASE("aggregate cost reproduces the published comparisons") {
  // RC-Adder6 after Light: 47 T and 71 CNOT on 14 qubits -> 49.70.
  GateCounts a;
  a.t_like = 47;
  a.cnot = 71;
  CHECK(aggregate_cost(a, 14) == doctest::Approx(49.70).epsilon(0).scale(0).epsilon(0.0002));
  CHECK(std::fabs(aggregate_cost(a, 14) - 49.70) < 0.01);

  // GF(2^64) multiplier after Light: 16448 T, 24765 CNOT on 192 qubits.
  GateCounts b;
  b.t_like = 16448;
  b.cnot = 24765;
  CHECK(std::fabs(aggregate_cost(b, 192) - 18326.42) < 0.05);

  GateCounts zero;
  CHECK(aggregate_cost(zero, 4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(aggregate_cost(zero, 1), std::domain_error);
}

TEST_CASE("inverse reverses and conjugates rotations") {
  Circuit h1(1);
  h1.add(make_h(0));
  Circuit ih = inverse(h1);
  CHECK(ih.gates().size() == 1);
  CHECK(ih.gates()[0].kind == GateKind::H);

  Circuit t(1);
  t.add(make_rz(kPi / 4.0, 0));
  Circuit it = inverse(t);
  CHECK(it.gates()[0].angle.radians() == doctest::Approx(7.0 * kPi / 4.0));

  std::mt19937 rng(11);
  testutil::RandomCircuitOptions opts;
  opts.num_qubits = 3;
  opts.num_gates = 20;
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = testutil::random_circuit(rng, opts);
    Circuit round(3);
    round.append(c);
    round.append(inverse(c));
    Circuit identity(3);
    auto r = equivalent_up_to_phase(round, identity, 1e-8);
    CHECK(r.equivalent);
  }
}

TEST_CASE("expand_blocks repeats and remaps") {
  Circuit c(3);
  BlockDef def{"B", 1, {make_h(0)}};
  int b = c.add_block(def);
  c.add_call(b, 3, {2});
  Circuit flat = expand_blocks(c);
  REQUIRE(flat.gates().size() == 3);
  for (const Gate& g : flat.gates()) {
    CHECK(g.kind == GateKind::H);
    CHECK(g.qubits[0] == 2);
  }

  Circuit plain(2);
  plain.add(make_cnot(0, 1));
  CHECK(expand_blocks(plain).gates().size() == 1);
}

TEST_CASE("expand_blocks equals manual concatenation for an LCR-shaped circuit") {
  // L C C R for t = 4 against hand-built concatenation.
  Circuit l(2), core(2), r(2);
  l.add(make_h(0));
  core.add(make_cnot(0, 1));
  core.add(make_rz(0.3, 1));
  r.add(make_h(1));

  Circuit blocked(2);
  std::vector<QubitId> id_map{0, 1};
  int lb = blocked.add_block(BlockDef{"L", 2, l.gates()});
  int cb = blocked.add_block(BlockDef{"C", 2, core.gates()});
  int rb = blocked.add_block(BlockDef{"R", 2, r.gates()});
  blocked.add_call(lb, 1, id_map);
  blocked.add_call(cb, 2, id_map);
  blocked.add_call(rb, 1, id_map);

  Circuit manual(2);
  manual.append(l);
  manual.append(core);
  manual.append(core);
  manual.append(r);

  Circuit flat = expand_blocks(blocked);
  REQUIRE(flat.gates().size() == manual.gates().size());
  for (size_t i = 0; i < flat.gates().size(); ++i) CHECK(flat.gates()[i] == manual.gates()[i]);
}

TEST_CASE("counts agree between blocked and expanded form") {
  std::mt19937 rng(5);
  testutil::RandomCircuitOptions opts;
  opts.num_qubits = 3;
  opts.num_gates = 12;
  for (int trial = 0; trial < 20; ++trial) {
    Circuit body = testutil::random_circuit(rng, opts);
    Circuit blocked(5);
    int b = blocked.add_block(BlockDef{"B", 3, body.gates()});
    blocked.add(make_h(4));
    int repeat = 1 + static_cast<int>(rng() % 4);
    blocked.add_call(b, repeat, {1, 3, 0});
    GateCounts via_blocks = counts(blocked);
    GateCounts via_flat = counts(expand_blocks(blocked));
    CHECK(via_blocks.total() == via_flat.total());
    CHECK(via_blocks.cnot == via_flat.cnot);
    CHECK(via_blocks.rz_total() == via_flat.rz_total());
    CHECK(via_blocks.h == via_flat.h);
  }
}

TEST_CASE("block mapping must be injective and in range") {
  Circuit c(2);
  int b = c.add_block(BlockDef{"B", 2, {make_cnot(0, 1)}});
  CHECK_THROWS(c.add_call(b, 1, {0, 0}));
  CHECK_THROWS(c.add_call(b, 1, {0, 5}));
}

TEST_CASE("interaction set collects unordered pairs") {
  Circuit c(4);
  c.add(make_cnot(2, 1));
  c.add(make_cnot(1, 2));
  c.add(make_cnot(0, 3));
  auto pairs = interaction_set(c);
  CHECK(pairs.size() == 2);
  CHECK(pairs.contains({1, 2}));
  CHECK(pairs.contains({0, 3}));
}
