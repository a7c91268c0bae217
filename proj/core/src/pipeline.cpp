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

#include "qcopt/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "qcopt/dag.hpp"
#include "qcopt/floating.hpp"
#include "qcopt/phase_poly.hpp"
#include "qcopt/rewrite.hpp"
#include "qcopt/verify.hpp"

namespace qcopt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Circuit preprocess(const Circuit& flat_or_blocked, long long* cancelled) {
  Circuit circuit = flat_or_blocked.is_flat() ? flat_or_blocked : expand_blocks(flat_or_blocked);
  if (cancelled) *cancelled = 0;
  if (!circuit.is_not_cnot_toffoli()) return circuit;

  std::vector<Gate> gates = circuit.gates();
  std::vector<char> dead(gates.size(), 0);
  const int n = circuit.num_qubits();

  // Per-wire successor links.
  std::vector<std::vector<int>> wire_pos(static_cast<size_t>(n));
  for (size_t i = 0; i < gates.size(); ++i)
    for (QubitId q : gates[i].operands()) wire_pos[q].push_back(static_cast<int>(i));

  for (size_t i = 0; i < gates.size(); ++i) {
    if (dead[i] || gates[i].kind != GateKind::NOT) continue;
    QubitId q = gates[i].qubits[0];
    const auto& wp = wire_pos[q];
    int rank = static_cast<int>(std::lower_bound(wp.begin(), wp.end(), static_cast<int>(i)) -
                                wp.begin());
    std::vector<std::pair<int, int>> flips;  // (gate, control slot)
    bool committed = false;
    for (int j = rank + 1; j < static_cast<int>(wp.size()); ++j) {
      int pos = wp[static_cast<size_t>(j)];
      if (dead[static_cast<size_t>(pos)]) continue;
      Gate& g = gates[static_cast<size_t>(pos)];
      if (g.kind == GateKind::NOT) {
        dead[i] = dead[static_cast<size_t>(pos)] = 1;
        if (cancelled) *cancelled += 2;
        committed = true;
        break;
      }
      if (g.kind == GateKind::CNOT) {
        if (g.qubits[1] == q) continue;  // commutes through the target
        break;                           // blocked by a CNOT control
      }
      if (g.kind == GateKind::TOFFOLI) {
        if (g.qubits[2] == q) continue;  // target: commutes
        int slot = g.qubits[0] == q ? 0 : 1;
        g.neg_controls ^= static_cast<uint8_t>(1u << slot);
        flips.emplace_back(pos, slot);
        continue;
      }
      break;
    }
    if (!committed) {
      for (auto& [pos, slot] : flips)
        gates[static_cast<size_t>(pos)].neg_controls ^= static_cast<uint8_t>(1u << slot);
    }
  }

  Circuit out(n);
  out.set_qubit_names(circuit.qubit_names());
  for (size_t i = 0; i < gates.size(); ++i)
    if (!dead[i]) out.add(gates[i]);
  return out;
}

Circuit decompose_toffoli(const Circuit& flat_or_blocked, int* num_vars) {
  Circuit circuit = flat_or_blocked.is_flat() ? flat_or_blocked : expand_blocks(flat_or_blocked);
  int vars = 0;
  for (const Gate& g : circuit.gates())
    if (g.kind == GateKind::RZ)
      for (const PolarityTerm& t : g.angle.terms()) vars = std::max(vars, t.var + 1);

  Circuit out(circuit.num_qubits());
  out.set_qubit_names(circuit.qubit_names());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::TOFFOLI) {
      out.add(g);
      continue;
    }
    const QubitId a = g.qubits[0], b = g.qubits[1], c = g.qubits[2];
    const int s = vars++;
    const Angle t_plus = Angle::symbolic(s, +1);
    const Angle t_minus = Angle::symbolic(s, -1);
    if (g.neg_controls & 1) out.add(make_not(a));
    if (g.neg_controls & 2) out.add(make_not(b));
    out.add(make_h(c));
    out.add(make_cnot(b, c));
    out.add(make_rz(t_minus, c));
    out.add(make_cnot(a, c));
    out.add(make_rz(t_plus, c));
    out.add(make_cnot(b, c));
    out.add(make_rz(t_minus, c));
    out.add(make_cnot(a, c));
    out.add(make_rz(t_plus, b));
    out.add(make_rz(t_plus, c));
    out.add(make_h(c));
    out.add(make_cnot(a, b));
    out.add(make_rz(t_plus, a));
    out.add(make_rz(t_minus, b));
    out.add(make_cnot(a, b));
    if (g.neg_controls & 1) out.add(make_not(a));
    if (g.neg_controls & 2) out.add(make_not(b));
  }
  if (num_vars) *num_vars = vars;
  return out;
}

Circuit resolve_polarities(const Circuit& circuit, long long* zeroed) {
  if (zeroed) *zeroed = 0;
  int num_vars = 0;
  for (const Gate& g : circuit.gates())
    if (g.kind == GateKind::RZ)
      for (const PolarityTerm& t : g.angle.terms()) num_vars = std::max(num_vars, t.var + 1);
  if (num_vars == 0) return circuit;

  // Variables are assigned in order of first appearance in the netlist.
  std::vector<int> first_seen;
  std::vector<char> seen(static_cast<size_t>(num_vars), 0);
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::RZ) continue;
    for (const PolarityTerm& t : g.angle.terms()) {
      if (!seen[static_cast<size_t>(t.var)]) {
        seen[static_cast<size_t>(t.var)] = 1;
        first_seen.push_back(t.var);
      }
    }
  }

  std::vector<int> signs(static_cast<size_t>(num_vars), 0);
  for (int var : first_seen) {
    long long t_like_plus = 0, t_like_minus = 0;
    for (const Gate& g : circuit.gates()) {
      if (g.kind != GateKind::RZ || !g.angle.is_symbolic()) continue;
      bool uses_var = false;
      bool rest_assigned = true;
      for (const PolarityTerm& t : g.angle.terms()) {
        if (t.var == var) uses_var = true;
        else if (signs[static_cast<size_t>(t.var)] == 0) rest_assigned = false;
      }
      if (!uses_var || !rest_assigned) continue;
      for (int sign : {+1, -1}) {
        signs[static_cast<size_t>(var)] = sign;
        Angle resolved = g.angle.resolved(signs);
        if (!resolved.is_symbolic() && classify_rz(resolved) == RzClass::T_LIKE)
          (sign > 0 ? t_like_plus : t_like_minus) += 1;
      }
      signs[static_cast<size_t>(var)] = 0;
    }
    signs[static_cast<size_t>(var)] = t_like_minus < t_like_plus ? -1 : +1;
  }

  Circuit out(circuit.num_qubits());
  out.set_qubit_names(circuit.qubit_names());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::RZ || !g.angle.is_symbolic()) {
      out.add(g);
      continue;
    }
    Angle resolved = g.angle.resolved(signs);
    if (resolved.is_symbolic())
      throw std::logic_error("resolve_polarities: variable left unassigned");
    if (resolved.is_zero()) {
      if (zeroed) *zeroed += 1;
      continue;
    }
    Gate fixed = g;
    fixed.angle = resolved;
    out.add(fixed);
  }
  return out;
}

namespace {

struct ScheduleRunner {
  const PipelineOptions& opts;
  const std::vector<RewriteRule>& rules;
  OptimizationReport* report;
  Clock::time_point heavy_deadline{};
  bool has_deadline = false;
  bool timed_out = false;

  long long run_routine(Dag& dag, int routine) {
    RewriteOptions ro{opts.max_commute_window};
    size_t before = dag.live_count();
    switch (routine) {
      case 1: reduce_hadamards(dag); break;
      case 2: cancel_single_qubit(dag, ro); break;
      case 3: cancel_two_qubit(dag, ro); break;
      case 4: merge_rotations(dag, opts.max_region_gates); break;
      case 5: routine5(dag, rules, opts.max_region_gates); break;
      default: throw std::logic_error("unknown routine");
    }
    long long gain = static_cast<long long>(before) - static_cast<long long>(dag.live_count());
    if (report) report->routine_gain[static_cast<size_t>(routine)] += gain;
    return gain;
  }

  Circuit run_to_fixpoint(Circuit circuit, const std::vector<int>& sequence) {
    Circuit best = circuit;
    size_t best_size = circuit.gates().size();
    while (true) {
      Dag dag = to_dag(circuit);
      size_t before = dag.live_count();
      for (int routine : sequence) {
        if (has_deadline && Clock::now() > heavy_deadline) {
          timed_out = true;
          break;
        }
        run_routine(dag, routine);
      }
      circuit = dag.to_netlist();
      if (report) report->iterations += 1;
      if (circuit.gates().size() < best_size) {
        best = circuit;
        best_size = circuit.gates().size();
      }
      if (timed_out) return best;
      if (dag.live_count() >= before) return circuit;
    }
  }
};

const std::vector<int>& sequence_for(OptMode mode) {
  static const std::vector<int> light{1, 3, 2, 3, 1, 2, 4, 3, 2};
  static const std::vector<int> light_qfa{1, 3, 2, 3, 1, 2};
  static const std::vector<int> heavy{1, 3, 2, 3, 1, 2, 5};
  switch (mode) {
    case OptMode::Light: return light;
    case OptMode::LightQfa: return light_qfa;
    case OptMode::Heavy: return heavy;
  }
  return light;
}

Circuit run_pipeline(const Circuit& input, const PipelineOptions& opts,
                     OptimizationReport* report, Clock::time_point deadline,
                     bool has_deadline) {
  auto start = Clock::now();
  const std::vector<RewriteRule>& rules = opts.rules ? *opts.rules : seed_rules();

  Circuit circuit = input.is_flat() ? input : expand_blocks(input);
  if (report) {
    *report = OptimizationReport{};
    report->pre = counts(circuit);
  }
  long long cancelled = 0;
  circuit = preprocess(circuit, &cancelled);
  if (report) report->preprocess_cancelled = cancelled;
  int vars = 0;
  if (circuit.has_kind(GateKind::TOFFOLI)) circuit = decompose_toffoli(circuit, &vars);

  ScheduleRunner runner{opts, rules, report};
  runner.heavy_deadline = deadline;
  runner.has_deadline = has_deadline;
  circuit = runner.run_to_fixpoint(std::move(circuit), sequence_for(opts.mode));

  if (circuit.has_symbolic_angles()) {
    long long zeroed = 0;
    circuit = resolve_polarities(circuit, &zeroed);
    if (report) report->polarity_zeroed = zeroed;
    Dag dag = to_dag(circuit);
    RewriteOptions ro{opts.max_commute_window};
    cancel_two_qubit(dag, ro);
    cancel_single_qubit(dag, ro);
    circuit = dag.to_netlist();
  }

  if (report) {
    report->post = counts(circuit);
    report->timed_out = runner.timed_out;
    report->seconds = seconds_since(start);
  }
  return circuit;
}

}  // namespace

Circuit optimize_light(const Circuit& circuit, const PipelineOptions& opts,
                       OptimizationReport* report) {
  PipelineOptions o = opts;
  if (o.mode == OptMode::Heavy) o.mode = OptMode::Light;
  return run_pipeline(circuit, o, report, {}, false);
}

Circuit optimize_heavy(const Circuit& circuit, const PipelineOptions& opts,
                       OptimizationReport* report) {
  // Measure the Light pass on the same input to set the timeout budget.
  PipelineOptions light = opts;
  light.mode = OptMode::Light;
  auto t0 = Clock::now();
  run_pipeline(circuit, light, nullptr, {}, false);
  double light_seconds = seconds_since(t0);

  PipelineOptions heavy = opts;
  heavy.mode = OptMode::Heavy;
  double budget = std::max(0.05, light_seconds * heavy.heavy_timeout_factor);
  auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget));
  return run_pipeline(circuit, heavy, report, deadline, true);
}

Circuit optimize(const Circuit& circuit, const PipelineOptions& opts,
                 OptimizationReport* report) {
  if (opts.mode == OptMode::Heavy) return optimize_heavy(circuit, opts, report);
  return run_pipeline(circuit, opts, report, {}, false);
}

namespace {

size_t common_prefix(const std::vector<Gate>& a, const std::vector<Gate>& b) {
  size_t n = std::min(a.size(), b.size());
  size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

Circuit concat_copies(const Circuit& block, int copies) {
  Circuit out(block.num_qubits());
  for (int i = 0; i < copies; ++i) out.append(block);
  return out;
}

}  // namespace

LcrResult lcr_optimize(const Circuit& block_in, int t, const PipelineOptions& opts) {
  if (t < 3) throw std::invalid_argument("lcr_optimize: requires t >= 3");
  Circuit block = block_in.is_flat() ? block_in : expand_blocks(block_in);

  Circuit o1 = optimize(block, opts);
  Circuit o2 = optimize(concat_copies(o1, 2), opts);
  if (o2.gates().size() < o1.gates().size())
    throw std::runtime_error(
        "lcr_optimize: optimization of two blocks telescopes across the boundary; "
        "LCR factorization is inapplicable");
  Circuit o3 = optimize(concat_copies(o1, 3), opts);

  size_t l_len = common_prefix(o1.gates(), o2.gates());
  const auto& g2 = o2.gates();
  const auto& g3 = o3.gates();
  size_t r_len = g2.size() - l_len;
  if (g3.size() < l_len + r_len)
    throw std::runtime_error("lcr_optimize: optimize(O^3) shorter than L plus R");
  for (size_t i = 0; i < l_len; ++i)
    if (!(g3[i] == g2[i]))
      throw std::runtime_error("lcr_optimize: optimize(O^3) does not start with L");
  for (size_t i = 0; i < r_len; ++i)
    if (!(g3[g3.size() - r_len + i] == g2[l_len + i]))
      throw std::runtime_error("lcr_optimize: optimize(O^3) does not end with R");

  const int n = block.num_qubits();
  LcrResult result{Circuit(n), Circuit(n), Circuit(n), Circuit(n)};
  for (size_t i = 0; i < l_len; ++i) result.l.add(g3[i]);
  for (size_t i = l_len; i < g3.size() - r_len; ++i) result.c.add(g3[i]);
  for (size_t i = g3.size() - r_len; i < g3.size(); ++i) result.r.add(g3[i]);

  std::vector<QubitId> identity_map;
  for (int q = 0; q < n; ++q) identity_map.push_back(static_cast<QubitId>(q));
  Circuit assembled(n);
  assembled.set_qubit_names(block.qubit_names());
  int lb = assembled.add_block(BlockDef{"L", n, result.l.gates()});
  int cb = assembled.add_block(BlockDef{"C", n, result.c.gates()});
  int rb = assembled.add_block(BlockDef{"R", n, result.r.gates()});
  assembled.add_call(lb, 1, identity_map);
  if (t > 2) assembled.add_call(cb, t - 2, identity_map);
  assembled.add_call(rb, 1, identity_map);
  result.assembled = std::move(assembled);
  return result;
}

Circuit checked_optimize(const Circuit& circuit, const PipelineOptions& opts) {
  Circuit flat = circuit.is_flat() ? circuit : expand_blocks(circuit);
  if (flat.num_qubits() > kMaxVerifyQubits)
    throw std::domain_error("checked_optimize: too many qubits to verify");
  Circuit optimized = optimize(flat, opts);
  auto r = equivalent_up_to_phase(flat, optimized, 1e-8);
  if (!r.equivalent)
    throw std::logic_error("checked_optimize: output is not equivalent to input (deviation " +
                           std::to_string(r.max_deviation) + ")");
  return optimized;
}

}  // namespace qcopt
