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
#include "qcopt/rewrite.hpp"
#include "qcopt/verify.hpp"
#include "test_util.hpp"

using namespace qcopt;

TEST_CASE("built-in patterns pass exhaustive certification") {
  CHECK_NOTHROW(verify_builtin_patterns());
}

TEST_CASE("reduce_hadamards applies the CNOT reversal") {
  Circuit c(2);
  c.add(make_h(0));
  c.add(make_h(1));
  c.add(make_cnot(0, 1));
  c.add(make_h(0));
  c.add(make_h(1));
  Dag dag = to_dag(c);
  int gained = reduce_hadamards(dag);
  CHECK(gained == 4);
  Circuit out = dag.to_netlist();
  REQUIRE(out.gates().size() == 1);
  CHECK(out.gates()[0] == make_cnot(1, 0));
  CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
}

TEST_CASE("reduce_hadamards rewrites H P H into P* H P*") {
  Circuit c(1);
  c.add(make_h(0));
  c.add(make_rz(kPi / 2.0, 0));
  c.add(make_h(0));
  Dag dag = to_dag(c);
  CHECK(reduce_hadamards(dag) == 1);
  Circuit out = dag.to_netlist();
  REQUIRE(out.gates().size() == 3);
  CHECK(out.gates()[0].angle.radians() == doctest::Approx(3.0 * kPi / 2.0));
  CHECK(out.gates()[1].kind == GateKind::H);
  CHECK(out.gates()[2].angle.radians() == doctest::Approx(3.0 * kPi / 2.0));
  CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
}

TEST_CASE("reduce_hadamards strips conjugating H pairs around shared-target runs") {
  Circuit c(3);
  c.add(make_h(1));
  c.add(make_rz(kPi / 2.0, 1));
  c.add(make_cnot(0, 1));
  c.add(make_cnot(2, 1));
  c.add(make_rz(3.0 * kPi / 2.0, 1));
  c.add(make_h(1));
  Dag dag = to_dag(c);
  CHECK(reduce_hadamards(dag) == 2);
  Circuit out = dag.to_netlist();
  CHECK(counts(out).h == 0);
  CHECK(counts(out).cnot == 2);
  CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
}

TEST_CASE("reduce_hadamards leaves H-free circuits alone") {
  Circuit c(2);
  c.add(make_cnot(0, 1));
  c.add(make_rz(0.4, 0));
  Dag dag = to_dag(c);
  CHECK(reduce_hadamards(dag) == 0);
  CHECK(dag.live_count() == 2);
}

TEST_CASE("rz commutation steps follow the certified patterns") {
  // Rz on a CNOT control commutes; on the target it does not.
  Circuit c(2);
  c.add(make_rz(0.3, 0));
  c.add(make_cnot(0, 1));
  Dag dag = to_dag(c);
  int cnot = dag.wire_nodes(0)[1];
  CHECK(rz_commute_step(dag, cnot, 0).has_value());
  CHECK_FALSE(rz_commute_step(dag, cnot, 1).has_value());
}

TEST_CASE("cancel_single_qubit removes inverse pairs and merges rotations") {
  SUBCASE("adjacent H pair") {
    Circuit c(1);
    c.add(make_h(0));
    c.add(make_h(0));
    Dag dag = to_dag(c);
    CHECK(cancel_single_qubit(dag) == 2);
    CHECK(dag.live_count() == 0);
  }
  SUBCASE("T and T-dagger across a CNOT control") {
    Circuit c(2);
    c.add(make_rz(kPi / 4.0, 0));
    c.add(make_cnot(0, 1));
    c.add(make_rz(7.0 * kPi / 4.0, 0));
    Dag dag = to_dag(c);
    CHECK(cancel_single_qubit(dag) == 2);
    Circuit out = dag.to_netlist();
    REQUIRE(out.gates().size() == 1);
    CHECK(out.gates()[0].kind == GateKind::CNOT);
    CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
  }
  SUBCASE("rotations merge through the commutation walk") {
    Circuit c(2);
    c.add(make_rz(0.3, 0));
    c.add(make_cnot(0, 1));
    c.add(make_rz(0.4, 0));
    Dag dag = to_dag(c);
    CHECK(cancel_single_qubit(dag) == 1);
    Circuit out = dag.to_netlist();
    REQUIRE(out.gates().size() == 2);
    CHECK(out.gates()[0].kind == GateKind::CNOT);
    CHECK(out.gates()[1].angle.radians() == doctest::Approx(0.7));
    CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
  }
  SUBCASE("merge to zero deletes both gates") {
    Circuit c(1);
    c.add(make_rz(kPi / 4.0, 0));
    c.add(make_rz(7.0 * kPi / 4.0, 0));
    Dag dag = to_dag(c);
    CHECK(cancel_single_qubit(dag) == 2);
    CHECK(dag.live_count() == 0);
  }
  SUBCASE("opposite symbolic polarities vanish for every assignment") {
    Circuit c(1);
    c.add(make_rz(Angle::symbolic(0, 1), 0));
    c.add(make_rz(Angle::symbolic(0, -1), 0));
    Dag dag = to_dag(c);
    CHECK(cancel_single_qubit(dag) == 2);
    CHECK(dag.live_count() == 0);
  }
  SUBCASE("deep chains via CNOT-Rz-CNOT hops") {
    Circuit c(2);
    c.add(make_rz(0.2, 1));
    c.add(make_cnot(0, 1));
    c.add(make_rz(0.5, 1));
    c.add(make_cnot(0, 1));
    c.add(make_rz(0.6, 1));
    Dag dag = to_dag(c);
    CHECK(cancel_single_qubit(dag) == 1);
    Circuit out = dag.to_netlist();
    CHECK(counts(out).rz_total() == 2);
    CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
  }
}

TEST_CASE("cancel_two_qubit removes CNOT pairs across commuting blocks") {
  SUBCASE("adjacent pair") {
    Circuit c(2);
    c.add(make_cnot(0, 1));
    c.add(make_cnot(0, 1));
    Dag dag = to_dag(c);
    CHECK(cancel_two_qubit(dag) == 2);
    CHECK(dag.live_count() == 0);
  }
  SUBCASE("pair separated by a shared-control CNOT") {
    Circuit c(3);
    c.add(make_cnot(0, 1));
    c.add(make_cnot(0, 2));
    c.add(make_cnot(0, 1));
    Dag dag = to_dag(c);
    CHECK(cancel_two_qubit(dag) == 2);
    Circuit out = dag.to_netlist();
    REQUIRE(out.gates().size() == 1);
    CHECK(out.gates()[0] == make_cnot(0, 2));
    CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
  }
  SUBCASE("reversed CNOT does not cancel") {
    Circuit c(2);
    c.add(make_cnot(0, 1));
    c.add(make_cnot(1, 0));
    Dag dag = to_dag(c);
    CHECK(cancel_two_qubit(dag) == 0);
    CHECK(dag.live_count() == 2);
  }
  SUBCASE("pair separated by an H-conjugated control block on the target wire") {
    Circuit c(3);
    c.add(make_cnot(0, 1));
    c.add(make_h(1));
    c.add(make_cnot(1, 2));
    c.add(make_h(1));
    c.add(make_cnot(0, 1));
    Dag dag = to_dag(c);
    CHECK(cancel_two_qubit(dag) == 2);
    Circuit out = dag.to_netlist();
    CHECK(counts(out).cnot == 1);
    CHECK(equivalent_up_to_phase(c, out, 1e-10).equivalent);
  }
}

TEST_CASE("routines preserve the unitary and never raise the tracked counts") {
  std::mt19937 rng(99);
  testutil::RandomCircuitOptions opts;
  opts.num_qubits = 6;
  opts.num_gates = 200;
  for (int trial = 0; trial < 8; ++trial) {
    Circuit c = testutil::random_circuit(rng, opts);
    GateCounts before = counts(c);
    Dag dag = to_dag(c);
    switch (trial % 3) {
      case 0: reduce_hadamards(dag); break;
      case 1: cancel_single_qubit(dag); break;
      case 2: cancel_two_qubit(dag); break;
    }
    Circuit out = dag.to_netlist();
    GateCounts after = counts(out);
    CHECK(equivalent_up_to_phase(c, out, 1e-8).equivalent);
    CHECK(after.h <= before.h);
    CHECK(after.cnot <= before.cnot);
    CHECK(after.total() <= before.total());
    if (trial % 3 != 0) CHECK(after.rz_total() <= before.rz_total());
  }
}

TEST_CASE("failed cancellation attempts leave the DAG unchanged") {
  // Rz on a target wire cannot move; the walk must not mutate anything.
  Circuit c(2);
  c.add(make_rz(0.77, 1));
  c.add(make_cnot(0, 1));
  c.add(make_h(1));
  Dag dag = to_dag(c);
  Circuit before = dag.to_netlist();
  cancel_single_qubit(dag);
  cancel_two_qubit(dag);
  Circuit after = dag.to_netlist();
  REQUIRE(before.gates().size() == after.gates().size());
  for (size_t i = 0; i < before.gates().size(); ++i)
    CHECK(before.gates()[i] == after.gates()[i]);
}
