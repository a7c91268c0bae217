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

#include <string>
#include <vector>

#include "qcopt/circuit.hpp"
#include "qcopt/rules.hpp"

namespace qcopt {

enum class OptMode { Light, Heavy, LightQfa };

struct PipelineOptions {
  OptMode mode = OptMode::Light;
  int max_commute_window = 0;        // 0 = unbounded
  int max_region_gates = 0;          // 0 = uncapped
  double heavy_timeout_factor = 200; // Heavy gives up past this multiple of Light's runtime
  const std::vector<RewriteRule>* rules = nullptr;  // defaults to the seed library
};

struct OptimizationReport {
  GateCounts pre, post;
  int iterations = 0;
  bool timed_out = false;
  double seconds = 0.0;
  // Reduction tallies per routine (indexed 1..5; slot 0 unused).
  std::array<long long, 6> routine_gain{};
  long long preprocess_cancelled = 0;
  long long polarity_zeroed = 0;
};

/// NOT-gate propagation over {NOT, CNOT, Toffoli} circuits. NOT gates move
/// right through Toffoli controls (negating them) and through CNOT/Toffoli
/// targets; a move is kept only when a NOT pair cancels. Circuits with other
/// gate kinds are returned unchanged.
Circuit preprocess(const Circuit& circuit, long long* cancelled = nullptr);

/// Expands every Toffoli into the 2-H, 6-CNOT, 7-T network. Each Toffoli's
/// T/T-dagger polarity is left symbolic via a fresh shared variable; negated
/// controls are conjugated with NOT gates. Returns the number of polarity
/// variables introduced via `num_vars`.
Circuit decompose_toffoli(const Circuit& circuit, int* num_vars = nullptr);

/// Assigns polarity variables greedily, in order of first appearance,
/// minimizing the resulting T-like count (ties resolve to +1). Zero-angle
/// rotations produced by the assignment are dropped.
Circuit resolve_polarities(const Circuit& circuit, long long* zeroed = nullptr);

Circuit optimize_light(const Circuit& circuit, const PipelineOptions& opts,
                       OptimizationReport* report = nullptr);
Circuit optimize_heavy(const Circuit& circuit, const PipelineOptions& opts,
                       OptimizationReport* report = nullptr);
Circuit optimize(const Circuit& circuit, const PipelineOptions& opts,
                 OptimizationReport* report = nullptr);

struct LcrResult {
  Circuit l, c, r;
  /// L C^(t-2) R assembled with blocks.
  Circuit assembled;
};

/// Factors optimize(block^t) as L C^(t-2) R by optimizing one, two and three
/// copies. Throws std::runtime_error when the factorization does not exist
/// (optimizations not confined to block boundaries).
LcrResult lcr_optimize(const Circuit& block, int t, const PipelineOptions& opts);

/// Runs the pipeline and asserts input/output equivalence (tolerance 1e-8)
/// on circuits small enough to verify. Throws std::logic_error on mismatch.
Circuit checked_optimize(const Circuit& circuit, const PipelineOptions& opts);

}  // namespace qcopt
