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

#include "qcopt/circuit.hpp"

namespace qcopt {

/// Per-qubit doubly-linked gate graph. Every subroutine scans preceding and
/// subsequent gates on single wires, so O(1) neighbor access per wire is the
/// query this structure optimizes for.
class Dag {
 public:
  static constexpr int kBoundary = -1;

  enum class Direction { Prev, Next };

  struct Node {
    Gate gate;
    uint64_t id = 0;
    bool alive = false;
    // Link per operand slot; kBoundary marks the chain end.
    std::array<int, 3> prev{kBoundary, kBoundary, kBoundary};
    std::array<int, 3> next{kBoundary, kBoundary, kBoundary};
  };

  explicit Dag(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  size_t live_count() const { return live_count_; }

  const Node& node(int idx) const { return nodes_[static_cast<size_t>(idx)]; }
  const Gate& gate(int idx) const { return nodes_[static_cast<size_t>(idx)].gate; }
  bool alive(int idx) const {
    return idx >= 0 && idx < static_cast<int>(nodes_.size()) && nodes_[static_cast<size_t>(idx)].alive;
  }

  int head(QubitId q) const { return head_[q]; }
  int tail(QubitId q) const { return tail_[q]; }

  /// Adjacent gate on `q`'s wire, or kBoundary. Throws if `q` is not an
  /// operand of the node.
  int neighbor(int node, QubitId q, Direction dir) const;

  /// Appends a gate at the end of all its wires. Returns the node index.
  int push_back(const Gate& g);

  /// Inserts a gate; prev_per_slot[i] is the node to follow on wire
  /// g.qubits[i] (kBoundary to insert at the wire head).
  int insert(const Gate& g, std::span<const int> prev_per_slot);

  /// Unlinks a node from every wire. The arena slot is retired, not reused.
  void erase(int node);

  /// Replaces angle in place (RZ nodes).
  void set_angle(int node, const Angle& angle);

  /// Removes `remove` (which must be contiguous on every wire it touches)
  /// and inserts `insert_gates` left-to-right into the vacated window.
  /// Inserted gates may only act on wires covered by the removal window or
  /// given in `extra_anchor_wires` pairs (wire, node-to-follow).
  /// Throws std::invalid_argument when the removal set is not contiguous.
  std::vector<int> splice(const std::vector<int>& remove,
                          const std::vector<Gate>& insert_gates);

  /// Deterministic topological order (Kahn, ties broken by smallest id).
  Circuit to_netlist() const;

  /// Live node indices in topological order.
  std::vector<int> topo_order() const;

  /// Netlist projection onto one wire, for tests and diagnostics.
  std::vector<int> wire_nodes(QubitId q) const;

  uint64_t next_id() const { return next_id_; }

 private:
  int slot_of(int node, QubitId q) const;
  void link_after(int node, int slot, QubitId q, int prev_node);

  int num_qubits_ = 0;
  uint64_t next_id_ = 0;
  size_t live_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> head_, tail_;
};

/// Builds the DAG gate-by-gate from a flat circuit in O(g).
Dag to_dag(const Circuit& circuit);

}  // namespace qcopt
