/** Copyright 2026 The gossipnet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "instance.hpp"

#include <string>

#include "error.hpp"

namespace gossip {

UtilityTable::UtilityTable(int n, Utility fill)
    : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
  if (n < 0) throw Error(ErrorCode::kInvalid, "negative agent count");
  for (Agent i = 0; i < n; ++i) set(i, i, 0);
}

std::size_t UtilityTable::index(Agent i, Agent j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error(ErrorCode::kInvalid, "agent index (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") out of range");
  }
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j);
}

Instance::Instance(UtilityTable table, bool symmetric, std::vector<std::string> labels)
    : table_(std::move(table)), symmetric_(symmetric), labels_(std::move(labels)) {
  const int n = table_.n_;
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::kInvalid, "label count does not match agent count");
  }
  for (Agent i = 0; i < n; ++i) {
    table_.set(i, i, 0);
    for (Agent j = 0; j < n; ++j) {
      const Utility u = table_.at(i, j);
      if (u.is_finite() && (u.raw() > Utility::kMaxPairMagnitude ||
                            u.raw() < -Utility::kMaxPairMagnitude)) {
        throw Error(ErrorCode::kInvalid, "utility magnitude above 2^31 at (" +
                                             std::to_string(i) + "," +
                                             std::to_string(j) + ")");
      }
      if (symmetric_ && j > i && u != table_.at(j, i)) {
        throw Error(ErrorCode::kInvalid, "asymmetric entry (" + std::to_string(i) + "," +
                                             std::to_string(j) +
                                             ") in a symmetric instance");
      }
    }
  }
}

bool Instance::is_friends_enemies() const {
  if (!symmetric_) return false;
  for (Agent i = 0; i < size(); ++i) {
    for (Agent j = i + 1; j < size(); ++j) {
      const Utility x = u(i, j);
      if (!x.is_neg_inf() && x != Utility(1)) return false;
    }
  }
  return true;
}

void require_friends_enemies(const Instance& inst, const char* algorithm) {
  if (!inst.is_friends_enemies()) {
    throw Error(ErrorCode::kNonConforming,
                std::string(algorithm) + " requires symmetric utilities in {-inf, 1}");
  }
}

Utility node_utility(const Instance& inst, const Network& net, Agent i) {
  if (i < 0 || i >= inst.size()) throw Error(ErrorCode::kInvalid, "agent out of range");
  if (net.size() != inst.size()) {
    throw Error(ErrorCode::kInvalid, "network and instance sizes differ");
  }
  const CliquePartition parts = components(net);
  const auto& block = parts.blocks()[parts.block_index()[i]];
  Utility total = 0;
  for (Agent j : block) {
    if (j != i) total += inst.u(i, j);
  }
  return total;
}

std::vector<Utility> node_utilities(const Instance& inst, const CliquePartition& blocks) {
  if (blocks.size() != inst.size()) {
    throw Error(ErrorCode::kInvalid, "partition and instance sizes differ");
  }
  std::vector<Utility> out(static_cast<std::size_t>(inst.size()), Utility(0));
  for (const auto& block : blocks.blocks()) {
    for (Agent i : block) {
      for (Agent j : block) {
        if (i != j) out[i] += inst.u(i, j);
      }
    }
  }
  return out;
}

Welfare total_welfare(const Instance& inst, const CliquePartition& blocks) {
  // Twice the pair-counted welfare equals the sum of node utilities.
  Utility doubled = 0;
  for (Utility u : node_utilities(inst, blocks)) doubled += u;
  return Welfare{doubled};
}

Welfare total_welfare(const Instance& inst, const Network& net) {
  if (net.size() != inst.size()) {
    throw Error(ErrorCode::kInvalid, "network and instance sizes differ");
  }
  return total_welfare(inst, components(net));
}

ConflictGraph conflict_graph(const Instance& inst) {
  std::vector<Edge> enemies;
  for (Agent i = 0; i < inst.size(); ++i) {
    for (Agent j = i + 1; j < inst.size(); ++j) {
      if (inst.u(i, j).is_neg_inf() || inst.u(j, i).is_neg_inf()) {
        enemies.emplace_back(i, j);
      }
    }
  }
  return ConflictGraph(inst.size(), std::move(enemies));
}

}  // namespace gossip
