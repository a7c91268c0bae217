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

#include <cstdint>
#include <vector>

namespace qcopt {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Tolerance governing angle equality, zero detection and Clifford
/// classification throughout the library.
inline constexpr double kAngleEps = 1e-10;

/// One symbolic contribution to a rotation angle: coeff * (pi/4) * sign(var).
/// Polarity variables come from Toffoli decompositions whose T/T-dagger
/// choice is left open until the end of optimization.
struct PolarityTerm {
  int var = -1;
  int coeff = 0;

  friend bool operator==(const PolarityTerm&, const PolarityTerm&) = default;
};

/// Classification of a concrete z-rotation angle.
enum class RzClass { T_LIKE, P_LIKE, Z_LIKE, GENERIC };

/// A z-rotation angle: a real part reduced to [0, 2*pi) plus an optional
/// list of symbolic polarity terms. A fully concrete angle has no terms.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);
  Angle(double radians, std::vector<PolarityTerm> terms);

  static Angle symbolic(int var, int coeff);

  double radians() const { return radians_; }
  const std::vector<PolarityTerm>& terms() const { return terms_; }
  bool is_symbolic() const { return !terms_.empty(); }

  /// True iff the angle is identically zero for every polarity assignment.
  bool is_zero() const;

  Angle operator+(const Angle& other) const;
  /// Negation modulo 2*pi, i.e. the angle of the inverse rotation.
  Angle negated() const;

  /// Substitutes sign choices for polarity variables. Variables not present
  /// in `signs` stay symbolic; if all are resolved, the result is concrete.
  Angle resolved(const std::vector<int>& signs) const;

  /// Angle value under a full assignment (all variables must be resolved).
  double value_under(const std::vector<int>& signs) const;

  bool approx_equals(const Angle& other) const;

 private:
  void canonicalize();

  double radians_ = 0.0;  // in [0, 2*pi)
  std::vector<PolarityTerm> terms_;
};

/// Reduces a real angle to [0, 2*pi); values within kAngleEps of 0 or 2*pi
/// normalize to exactly 0. Throws std::domain_error on non-finite input.
double normalize_angle(double radians);

/// Classifies a concrete angle. Throws std::domain_error if the angle still
/// carries unresolved symbolic terms.
RzClass classify_rz(const Angle& angle);

}  // namespace qcopt
