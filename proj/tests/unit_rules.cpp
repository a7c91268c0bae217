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

#include "doctest.h"
#include "qcopt/rules.hpp"
#include "qcopt/verify.hpp"

using namespace qcopt;

TEST_CASE("rule parsing accepts verified identities") {
  auto rules = parse_rule_library(
      "RULE hh REDUCING\n"
      "H a\n"
      "H a\n"
      "---\n");
  REQUIRE(rules.size() == 1);
  CHECK(rules[0].kind == RuleKind::REDUCING);
  CHECK(rules[0].pattern.size() == 2);
  CHECK(rules[0].replacement.empty());
}

TEST_CASE("inequivalent rules are rejected by the loader") {
  CHECK_THROWS_WITH_AS(parse_rule_library("RULE bogus REDUCING\nH a\n---\nX a\n"),
                       doctest::Contains("bogus"), std::runtime_error);
  // A count-increasing rule cannot be REDUCING even when unitarily valid.
  CHECK_THROWS_AS(parse_rule_library("RULE grow REDUCING\nH a\n---\nH a\nH a\nH a\n"),
                  std::runtime_error);
  // PRESERVING requires an exact count match.
  CHECK_THROWS_AS(parse_rule_library("RULE shrink PRESERVING\nH a\nH a\n---\n"),
                  std::runtime_error);
}

TEST_CASE("rules are limited to three wires") {
  CHECK_THROWS_AS(parse_rule_library("RULE wide REDUCING\ntof a b\ntof c d\n---\n"
                                     "tof a b\ntof c d\n"),
                  std::runtime_error);
}

TEST_CASE("the shipped seed library loads and certifies") {
  const auto& rules = seed_rules();
  CHECK(rules.size() >= 10);
  int preserving = 0, reducing = 0;
  for (const auto& r : rules) (r.kind == RuleKind::PRESERVING ? preserving : reducing)++;
  CHECK(preserving >= 1);
  CHECK(reducing >= 5);
  // Every rule re-verifies at the certification tolerance.
  for (const auto& r : rules) {
    Circuit lhs(r.num_wires), rhs(r.num_wires);
    for (const Gate& g : r.pattern) lhs.add(g);
    for (const Gate& g : r.replacement) rhs.add(g);
    auto eq = equivalent_up_to_phase(lhs, rhs, 1e-12);
    CHECK_MESSAGE(eq.equivalent, "rule ", r.name);
  }
}
