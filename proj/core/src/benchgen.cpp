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

#include "qcopt/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qcopt {

namespace {

// CP(theta) as Rz(theta/2)(c), CNOT, Rz(-theta/2)(t), CNOT, Rz(theta/2)(t).
void add_cp(Circuit& c, double theta, QubitId ctrl, QubitId tgt) {
  c.add(make_rz(theta / 2.0, ctrl));
  c.add(make_cnot(ctrl, tgt));
  c.add(make_rz(-theta / 2.0, tgt));
  c.add(make_cnot(ctrl, tgt));
  c.add(make_rz(theta / 2.0, tgt));
}

// CP gates with |angle| = 2*pi/2^k are dropped when 2*pi/2^k <= pi/2^cutoff.
bool cut(int k, int cutoff_exponent) { return k >= cutoff_exponent + 1; }

void add_qft(Circuit& c, int n, int base, int cutoff, bool inverse) {
  struct Op {
    bool h;
    int j, k;  // H on wire j, or CP_k(ctrl j+k-1, tgt j)
  };
  std::vector<Op> ops;
  for (int j = 0; j < n; ++j) {
    ops.push_back({true, j, 0});
    for (int k = 2; k <= n - j; ++k) {
      if (cut(k, cutoff)) break;
      ops.push_back({false, j, k});
    }
  }
  if (inverse) std::reverse(ops.begin(), ops.end());
  for (const Op& op : ops) {
    if (op.h) {
      c.add(make_h(static_cast<QubitId>(base + op.j)));
    } else {
      double theta = kTwoPi / std::pow(2.0, op.k);
      add_cp(c, inverse ? -theta : theta, static_cast<QubitId>(base + op.j + op.k - 1),
             static_cast<QubitId>(base + op.j));
    }
  }
}

}  // namespace

Circuit gen_qft(int n, int cutoff_exponent) {
  if (n < 1) throw std::invalid_argument("gen_qft: n must be >= 1");
  if (cutoff_exponent < 1) throw std::invalid_argument("gen_qft: cutoff must be >= 1");
  Circuit c(n);
  add_qft(c, n, 0, cutoff_exponent, false);
  return c;
}

Circuit gen_qfa(int n, int cutoff_exponent) {
  if (n < 1) throw std::invalid_argument("gen_qfa: n must be >= 1");
  Circuit c(2 * n);
  add_qft(c, n, n, cutoff_exponent, false);
  // Phase addition: wire b_j needs e^{2 pi i a / 2^(n-j)}, contributed by
  // a_i with k = i - j + 1 for i >= j.
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      int k = i - j + 1;
      if (cut(k, cutoff_exponent)) break;
      double theta = kTwoPi / std::pow(2.0, k);
      add_cp(c, theta, static_cast<QubitId>(i), static_cast<QubitId>(n + j));
    }
  }
  add_qft(c, n, n, cutoff_exponent, true);
  return c;
}

Circuit gen_toffoli_nc(int k) {
  if (k < 3) throw std::invalid_argument("gen_toffoli_nc: k must be >= 3");
  const int ancilla0 = k, target = 2 * k - 2;
  Circuit c(2 * k - 1);
  std::vector<Gate> compute;
  compute.push_back(make_toffoli(0, 1, static_cast<QubitId>(ancilla0)));
  for (int i = 1; i < k - 2; ++i)
    compute.push_back(make_toffoli(static_cast<QubitId>(i + 1),
                                   static_cast<QubitId>(ancilla0 + i - 1),
                                   static_cast<QubitId>(ancilla0 + i)));
  for (const Gate& g : compute) c.add(g);
  c.add(make_toffoli(static_cast<QubitId>(k - 1), static_cast<QubitId>(ancilla0 + k - 3),
                     static_cast<QubitId>(target)));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) c.add(*it);
  return c;
}

Circuit gen_toffoli_barenco(int k) {
  if (k < 3) throw std::invalid_argument("gen_toffoli_barenco: k must be >= 3");
  const int ancilla0 = k, target = 2 * k - 2;
  Circuit c(2 * k - 1);
  // Half-network: descending chain from the target gate, the (c0,c1) gate,
  // then the ascending chain; applied twice the ancillas are restored even
  // when dirty.
  std::vector<Gate> half;
  auto gate_for = [&](int level) {
    // level k-2 targets the output; level i targets ancilla a_i.
    if (level == k - 2)
      return make_toffoli(static_cast<QubitId>(k - 1), static_cast<QubitId>(ancilla0 + k - 3),
                          static_cast<QubitId>(target));
    if (level == 0) return make_toffoli(0, 1, static_cast<QubitId>(ancilla0));
    return make_toffoli(static_cast<QubitId>(level + 1), static_cast<QubitId>(ancilla0 + level - 1),
                        static_cast<QubitId>(ancilla0 + level));
  };
  for (int level = k - 2; level >= 0; --level) half.push_back(gate_for(level));
  for (int level = 1; level <= k - 3; ++level) half.push_back(gate_for(level));
  for (int rep = 0; rep < 2; ++rep)
    for (const Gate& g : half) c.add(g);
  return c;
}

std::vector<double> pf_field_values(const PfSpec& spec) {
  std::mt19937 rng(spec.field_seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> h(static_cast<size_t>(spec.n));
  for (double& v : h) v = dist(rng);
  return h;
}

namespace {

struct Term {
  enum Kind { XX, ZZ, YY, FIELD } kind;
  int site;      // bond index or field site
  double coeff;  // 1 for bonds, h_j for fields
};

void add_term(Circuit& c, const Term& term, double dt, int n) {
  const double theta = 2.0 * term.coeff * dt;  // Rz angle for exp(-i coeff dt P)
  if (term.kind == Term::FIELD) {
    c.add(make_rz(theta, static_cast<QubitId>(term.site)));
    return;
  }
  const QubitId a = static_cast<QubitId>(term.site);
  const QubitId b = static_cast<QubitId>((term.site + 1) % n);
  const double p = kPi / 2.0, pd = 3.0 * kPi / 2.0;
  switch (term.kind) {
    case Term::ZZ:
      c.add(make_cnot(b, a));
      c.add(make_rz(theta, a));
      c.add(make_cnot(b, a));
      break;
    case Term::XX:
      c.add(make_cnot(b, a));
      c.add(make_h(b));
      c.add(make_rz(theta, b));
      c.add(make_h(b));
      c.add(make_cnot(b, a));
      break;
    case Term::YY:
      c.add(make_rz(pd, a));
      c.add(make_rz(pd, b));
      c.add(make_cnot(b, a));
      c.add(make_h(b));
      c.add(make_rz(theta, b));
      c.add(make_h(b));
      c.add(make_cnot(b, a));
      c.add(make_rz(p, a));
      c.add(make_rz(p, b));
      break;
    case Term::FIELD:
      break;
  }
}

void add_sweep(Circuit& c, const std::vector<Term>& terms, double dt, int n, bool reversed) {
  if (!reversed) {
    for (const Term& t : terms) add_term(c, t, dt, n);
  } else {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) add_term(c, *it, dt, n);
  }
}

// Second-order Suzuki step: forward half-sweep then reversed half-sweep.
void add_s2(Circuit& c, const std::vector<Term>& terms, double dt, int n) {
  add_sweep(c, terms, dt / 2.0, n, false);
  add_sweep(c, terms, dt / 2.0, n, true);
}

void add_suzuki(Circuit& c, const std::vector<Term>& terms, double dt, int n, int order) {
  if (order == 1) {
    add_sweep(c, terms, dt, n, false);
    return;
  }
  if (order == 2) {
    add_s2(c, terms, dt, n);
    return;
  }
  const double p = 1.0 / (4.0 - std::pow(4.0, 1.0 / (order - 1)));
  add_suzuki(c, terms, p * dt, n, order - 2);
  add_suzuki(c, terms, p * dt, n, order - 2);
  add_suzuki(c, terms, (1.0 - 4.0 * p) * dt, n, order - 2);
  add_suzuki(c, terms, p * dt, n, order - 2);
  add_suzuki(c, terms, p * dt, n, order - 2);
}

}  // namespace

PfCircuit gen_product_formula(const PfSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("gen_product_formula: n must be >= 3");
  if (spec.order != 1 && spec.order != 2 && spec.order != 4 && spec.order != 6)
    throw std::invalid_argument("gen_product_formula: order must be 1, 2, 4 or 6");
  if (spec.trotter_steps < 1)
    throw std::invalid_argument("gen_product_formula: steps must be >= 1");

  std::vector<double> fields = pf_field_values(spec);
  std::vector<Term> terms;
  for (int j = 0; j < spec.n; ++j) {
    terms.push_back({Term::XX, j, 1.0});
    terms.push_back({Term::ZZ, j, 1.0});
    terms.push_back({Term::YY, j, 1.0});
  }
  for (int j = 0; j < spec.n; ++j)
    terms.push_back({Term::FIELD, j, fields[static_cast<size_t>(j)]});

  const double dt = spec.time / spec.trotter_steps;
  Circuit block(spec.n);
  add_suzuki(block, terms, dt, spec.n, spec.order);
  return PfCircuit{std::move(block), spec.trotter_steps};
}

}  // namespace qcopt
