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

#include "qcopt/dag.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace qcopt {

Dag::Dag(int num_qubits)
    : num_qubits_(num_qubits),
      head_(static_cast<size_t>(num_qubits), kBoundary),
      tail_(static_cast<size_t>(num_qubits), kBoundary) {}

int Dag::slot_of(int node, QubitId q) const {
  const Node& n = nodes_[static_cast<size_t>(node)];
  for (int i = 0; i < n.gate.arity(); ++i)
    if (n.gate.qubits[static_cast<size_t>(i)] == q) return i;
  throw std::invalid_argument("Dag: qubit is not an operand of the node");
}

int Dag::neighbor(int node, QubitId q, Direction dir) const {
  const Node& n = nodes_[static_cast<size_t>(node)];
  int slot = slot_of(node, q);
  return dir == Direction::Next ? n.next[static_cast<size_t>(slot)]
                                : n.prev[static_cast<size_t>(slot)];
}

int Dag::push_back(const Gate& g) {
  std::array<int, 3> prevs{kBoundary, kBoundary, kBoundary};
  for (int i = 0; i < g.arity(); ++i) prevs[static_cast<size_t>(i)] = tail_[g.qubits[static_cast<size_t>(i)]];
  return insert(g, {prevs.data(), static_cast<size_t>(g.arity())});
}

void Dag::link_after(int node, int slot, QubitId q, int prev_node) {
  Node& n = nodes_[static_cast<size_t>(node)];
  int next_node;
  if (prev_node == kBoundary) {
    next_node = head_[q];
    head_[q] = node;
  } else {
    int pslot = slot_of(prev_node, q);
    Node& p = nodes_[static_cast<size_t>(prev_node)];
    next_node = p.next[static_cast<size_t>(pslot)];
    p.next[static_cast<size_t>(pslot)] = node;
  }
  n.prev[static_cast<size_t>(slot)] = prev_node;
  n.next[static_cast<size_t>(slot)] = next_node;
  if (next_node == kBoundary) {
    tail_[q] = node;
  } else {
    int nslot = slot_of(next_node, q);
    nodes_[static_cast<size_t>(next_node)].prev[static_cast<size_t>(nslot)] = node;
  }
}

int Dag::insert(const Gate& g, std::span<const int> prev_per_slot) {
  if (static_cast<int>(prev_per_slot.size()) != g.arity())
    throw std::invalid_argument("Dag::insert: anchor count does not match arity");
  for (QubitId q : g.operands()) {
    if (static_cast<int>(q) >= num_qubits_) throw std::out_of_range("Dag::insert: qubit out of range");
  }
  int idx = static_cast<int>(nodes_.size());
  Node n;
  n.gate = g;
  n.id = next_id_++;
  n.alive = true;
  nodes_.push_back(n);
  for (int i = 0; i < g.arity(); ++i) {
    int anchor = prev_per_slot[static_cast<size_t>(i)];
    if (anchor != kBoundary && !alive(anchor))
      throw std::invalid_argument("Dag::insert: dead anchor");
    link_after(idx, i, g.qubits[static_cast<size_t>(i)], anchor);
  }
  ++live_count_;
  return idx;
}

void Dag::erase(int node) {
  if (!alive(node)) throw std::invalid_argument("Dag::erase: node not alive");
  Node& n = nodes_[static_cast<size_t>(node)];
  for (int i = 0; i < n.gate.arity(); ++i) {
    QubitId q = n.gate.qubits[static_cast<size_t>(i)];
    int p = n.prev[static_cast<size_t>(i)];
    int nx = n.next[static_cast<size_t>(i)];
    if (p == kBoundary) {
      head_[q] = nx;
    } else {
      nodes_[static_cast<size_t>(p)].next[static_cast<size_t>(slot_of(p, q))] = nx;
    }
    if (nx == kBoundary) {
      tail_[q] = p;
    } else {
      nodes_[static_cast<size_t>(nx)].prev[static_cast<size_t>(slot_of(nx, q))] = p;
    }
  }
  n.alive = false;
  --live_count_;
}

void Dag::set_angle(int node, const Angle& angle) {
  if (!alive(node)) throw std::invalid_argument("Dag::set_angle: node not alive");
  Node& n = nodes_[static_cast<size_t>(node)];
  if (n.gate.kind != GateKind::RZ) throw std::invalid_argument("Dag::set_angle: not an Rz node");
  n.gate.angle = angle;
}

std::vector<int> Dag::splice(const std::vector<int>& remove,
                             const std::vector<Gate>& insert_gates) {
  // Record, per wire, the predecessor of the removal window, and validate
  // that the removed nodes form one contiguous run on every touched wire.
  std::map<QubitId, int> window_prev;
  std::vector<char> in_remove(nodes_.size(), 0);
  for (int r : remove) {
    if (!alive(r)) throw std::invalid_argument("Dag::splice: removal of dead node");
    in_remove[static_cast<size_t>(r)] = 1;
  }
  for (int r : remove) {
    const Node& n = nodes_[static_cast<size_t>(r)];
    for (int i = 0; i < n.gate.arity(); ++i) {
      QubitId q = n.gate.qubits[static_cast<size_t>(i)];
      if (window_prev.contains(q)) continue;
      // Walk to the first removed node on this wire.
      int first = r;
      while (true) {
        int p = nodes_[static_cast<size_t>(first)].prev[static_cast<size_t>(slot_of(first, q))];
        if (p == kBoundary || !in_remove[static_cast<size_t>(p)]) {
          window_prev[q] = p;
          break;
        }
        first = p;
      }
    }
  }
  // Contiguity: walking forward from each window start must cover exactly
  // the removed nodes on that wire before leaving the set.
  for (auto& [q, prev] : window_prev) {
    int cur = prev == kBoundary ? head_[q] : nodes_[static_cast<size_t>(prev)].next[static_cast<size_t>(slot_of(prev, q))];
    size_t removed_on_wire = 0;
    while (cur != kBoundary && in_remove[static_cast<size_t>(cur)]) {
      ++removed_on_wire;
      cur = nodes_[static_cast<size_t>(cur)].next[static_cast<size_t>(slot_of(cur, q))];
    }
    size_t expected = 0;
    for (int r : remove)
      if (nodes_[static_cast<size_t>(r)].gate.acts_on(q)) ++expected;
    if (removed_on_wire != expected)
      throw std::invalid_argument("Dag::splice: removal window not contiguous on a wire");
  }
  for (int r : remove) erase(r);
  // Thread inserted gates left-to-right through per-wire cursors.
  std::vector<int> inserted;
  inserted.reserve(insert_gates.size());
  for (const Gate& g : insert_gates) {
    std::array<int, 3> prevs{kBoundary, kBoundary, kBoundary};
    for (int i = 0; i < g.arity(); ++i) {
      QubitId q = g.qubits[static_cast<size_t>(i)];
      auto it = window_prev.find(q);
      if (it == window_prev.end())
        throw std::invalid_argument("Dag::splice: inserted gate leaves the removal window");
      prevs[static_cast<size_t>(i)] = it->second;
    }
    int idx = insert(g, {prevs.data(), static_cast<size_t>(g.arity())});
    for (QubitId q : g.operands()) window_prev[q] = idx;
    inserted.push_back(idx);
  }
  return inserted;
}

std::vector<int> Dag::topo_order() const {
  std::vector<int> indegree(nodes_.size(), 0);
  std::priority_queue<std::pair<uint64_t, int>, std::vector<std::pair<uint64_t, int>>,
                      std::greater<>> ready;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (!n.alive) continue;
    int deg = 0;
    for (int s = 0; s < n.gate.arity(); ++s)
      if (n.prev[static_cast<size_t>(s)] != kBoundary) ++deg;
    indegree[i] = deg;
    if (deg == 0) ready.push({n.id, static_cast<int>(i)});
  }
  std::vector<int> order;
  order.reserve(live_count_);
  while (!ready.empty()) {
    auto [id, idx] = ready.top();
    ready.pop();
    order.push_back(idx);
    const Node& n = nodes_[static_cast<size_t>(idx)];
    for (int s = 0; s < n.gate.arity(); ++s) {
      int nx = n.next[static_cast<size_t>(s)];
      if (nx == kBoundary) continue;
      if (--indegree[static_cast<size_t>(nx)] == 0)
        ready.push({nodes_[static_cast<size_t>(nx)].id, nx});
    }
  }
  if (order.size() != live_count_) throw std::logic_error("Dag: cycle detected");
  return order;
}

Circuit Dag::to_netlist() const {
  Circuit out(num_qubits_);
  for (int idx : topo_order()) out.add(nodes_[static_cast<size_t>(idx)].gate);
  return out;
}

std::vector<int> Dag::wire_nodes(QubitId q) const {
  std::vector<int> out;
  for (int cur = head_[q]; cur != kBoundary;
       cur = nodes_[static_cast<size_t>(cur)].next[static_cast<size_t>(slot_of(cur, q))]) {
    out.push_back(cur);
  }
  return out;
}

Dag to_dag(const Circuit& circuit) {
  if (!circuit.is_flat()) throw std::invalid_argument("to_dag: circuit must be flat");
  Dag dag(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) dag.push_back(g);
  return dag;
}

}  // namespace qcopt
