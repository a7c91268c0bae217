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

#include <cmath>
#include <random>

#include "doctest.h"
#include "qcopt/angle.hpp"

using namespace qcopt;

namespace {

// Independent oracle: bring into range by repeated shifting.
double shift_into_range(double x) {
  while (x < 0) x += kTwoPi;
  while (x >= kTwoPi) x -= kTwoPi;
  return x;
}

}  // namespace

TEST_CASE("normalize_angle basic values") {
  CHECK(normalize_angle(kTwoPi) == doctest::Approx(0.0));
  CHECK(normalize_angle(9.0 * kPi / 4.0) == doctest::Approx(kPi / 4.0));
  // Oracle: add 2*pi until in range, cross-checked against fmod.
  CHECK(normalize_angle(-kPi / 2.0) == doctest::Approx(shift_into_range(-kPi / 2.0)));
  CHECK(normalize_angle(-kPi / 2.0) == doctest::Approx(3.0 * kPi / 2.0));
  CHECK_THROWS_AS(normalize_angle(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(normalize_angle(INFINITY), std::domain_error);
}

TEST_CASE("normalize_angle is idempotent and matches the shifting oracle") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    double x = dist(rng);
    double n = normalize_angle(x);
    CHECK(n >= 0.0);
    CHECK(n < kTwoPi);
    CHECK(normalize_angle(n) == doctest::Approx(n));
    double oracle = shift_into_range(x);
    double diff = std::fabs(n - oracle);
    CHECK(std::min(diff, kTwoPi - diff) < 1e-9);
  }
}

TEST_CASE("classify_rz distinguishes the Clifford rotations") {
  CHECK(classify_rz(Angle(kPi / 4.0)) == RzClass::T_LIKE);
  CHECK(classify_rz(Angle(kPi / 2.0)) == RzClass::P_LIKE);
  CHECK(classify_rz(Angle(0.3)) == RzClass::GENERIC);
  CHECK(classify_rz(Angle(kPi)) == RzClass::Z_LIKE);
  CHECK(classify_rz(Angle(7.0 * kPi / 4.0)) == RzClass::T_LIKE);
  CHECK(classify_rz(Angle(3.0 * kPi / 2.0)) == RzClass::P_LIKE);
  CHECK_THROWS_AS(classify_rz(Angle::symbolic(0, 1)), std::domain_error);
}

TEST_CASE("odd multiples of pi/4 classify as T-like") {
  for (int k = -15; k <= 15; k += 2) {
    CHECK(classify_rz(Angle(normalize_angle(k * kPi / 4.0))) == RzClass::T_LIKE);
  }
}

TEST_CASE("symbolic angle arithmetic") {
  Angle t = Angle::symbolic(0, 1);
  Angle tdag = Angle::symbolic(0, -1);
  CHECK((t + tdag).is_zero());
  CHECK_FALSE((t + t).is_zero());
  CHECK((t + t).terms().size() == 1);
  CHECK((t + t).terms()[0].coeff == 2);

  Angle mixed = Angle(0.5) + Angle::symbolic(1, 1);
  CHECK(mixed.is_symbolic());
  std::vector<int> signs{0, -1};
  Angle resolved = mixed.resolved(signs);
  CHECK_FALSE(resolved.is_symbolic());
  CHECK(resolved.radians() == doctest::Approx(normalize_angle(0.5 - kPi / 4.0)));

  // Negation is an inverse modulo 2*pi, with terms negated.
  Angle a = Angle(1.23) + Angle::symbolic(2, 1);
  CHECK((a + a.negated()).is_zero());
}
