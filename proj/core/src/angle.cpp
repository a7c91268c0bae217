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

#include "qcopt/angle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcopt {

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::domain_error("normalize_angle: non-finite angle");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r < kAngleEps || kTwoPi - r < kAngleEps) r = 0.0;
  return r;
}

Angle::Angle(double radians) : radians_(normalize_angle(radians)) {}

Angle::Angle(double radians, std::vector<PolarityTerm> terms)
    : radians_(normalize_angle(radians)), terms_(std::move(terms)) {
  canonicalize();
}

Angle Angle::symbolic(int var, int coeff) {
  Angle a;
  a.terms_.push_back({var, coeff});
  return a;
}

void Angle::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PolarityTerm& a, const PolarityTerm& b) { return a.var < b.var; });
  std::vector<PolarityTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const PolarityTerm& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

bool Angle::is_zero() const { return terms_.empty() && radians_ == 0.0; }

Angle Angle::operator+(const Angle& other) const {
  std::vector<PolarityTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return Angle(radians_ + other.radians_, std::move(terms));
}

Angle Angle::negated() const {
  std::vector<PolarityTerm> terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return Angle(radians_ == 0.0 ? 0.0 : kTwoPi - radians_, std::move(terms));
}

Angle Angle::resolved(const std::vector<int>& signs) const {
  double r = radians_;
  std::vector<PolarityTerm> rest;
  for (const auto& t : terms_) {
    int s = (t.var >= 0 && t.var < static_cast<int>(signs.size())) ? signs[t.var] : 0;
    if (s == 0) {
      rest.push_back(t);
    } else {
      r += t.coeff * (kPi / 4.0) * s;
    }
  }
  return Angle(r, std::move(rest));
}

double Angle::value_under(const std::vector<int>& signs) const {
  Angle a = resolved(signs);
  if (a.is_symbolic()) {
    throw std::domain_error("Angle::value_under: incomplete polarity assignment");
  }
  return a.radians();
}

bool Angle::approx_equals(const Angle& other) const {
  if (terms_ != other.terms_) return false;
  double d = std::fabs(radians_ - other.radians_);
  return d < kAngleEps || kTwoPi - d < kAngleEps;
}

namespace {

bool near_multiple(double value, double unit, int& mult) {
  double q = value / unit;
  double rounded = std::round(q);
  if (std::fabs(q - rounded) * unit < kAngleEps) {
    mult = static_cast<int>(rounded);
    return true;
  }
  return false;
}

}  // namespace

RzClass classify_rz(const Angle& angle) {
  if (angle.is_symbolic()) {
    throw std::domain_error("classify_rz: unresolved symbolic angle");
  }
  int mult = 0;
  if (near_multiple(angle.radians(), kPi / 4.0, mult)) {
    mult = ((mult % 8) + 8) % 8;
    if (mult % 2 == 1) return RzClass::T_LIKE;
    if (mult == 2 || mult == 6) return RzClass::P_LIKE;
    if (mult == 4) return RzClass::Z_LIKE;
    // mult == 0 is an exact-zero rotation; treat as generic, callers drop it.
  }
  return RzClass::GENERIC;
}

}  // namespace qcopt
