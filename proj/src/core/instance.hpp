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

#ifndef GOSSIPNET_CORE_INSTANCE_HPP
#define GOSSIPNET_CORE_INSTANCE_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "utility.hpp"

namespace gossip {

/// Mutable n-by-n utility table used to assemble an Instance.
class UtilityTable {
 public:
  UtilityTable() = default;
  UtilityTable(int n, Utility fill);

  int size() const { return n_; }
  Utility at(Agent i, Agent j) const { return cells_[index(i, j)]; }
  /// Sets u[i][j] only.
  void set(Agent i, Agent j, Utility u) { cells_[index(i, j)] = u; }
  /// Sets u[i][j] and u[j][i].
  void set_pair(Agent i, Agent j, Utility u) {
    set(i, j, u);
    set(j, i, u);
  }
  friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

 private:
  friend class Instance;
  std::size_t index(Agent i, Agent j) const;

  int n_ = 0;
  std::vector<Utility> cells_;
};

/// The game: n agents and the ordered-pair utility table.
class Instance {
 public:
  Instance() = default;
  /// Forces the diagonal to 0. Throws ErrorCode::kInvalid when a finite
  /// entry exceeds Utility::kMaxPairMagnitude, when `symmetric` is set
  /// but the table is not, or when labels are given for a wrong count.
  Instance(UtilityTable table, bool symmetric, std::vector<std::string> labels = {});

  int size() const { return table_.n_; }
  Utility u(Agent i, Agent j) const { return table_.at(i, j); }
  bool symmetric() const { return symmetric_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const UtilityTable& table() const { return table_; }

  /// Symmetric and every off-diagonal entry is -inf or 1.
  bool is_friends_enemies() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.symmetric_ == b.symmetric_ && a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  UtilityTable table_;
  bool symmetric_ = true;
  std::vector<std::string> labels_;
};

/// Throws ErrorCode::kNonConforming unless inst.is_friends_enemies().
void require_friends_enemies(const Instance& inst, const char* algorithm);

Utility node_utility(const Instance& inst, const Network& net, Agent i);

/// Utilities of every agent when the components are the given blocks.
std::vector<Utility> node_utilities(const Instance& inst, const CliquePartition& blocks);

/// Each co-component pair counted once.
Welfare total_welfare(const Instance& inst, const Network& net);
Welfare total_welfare(const Instance& inst, const CliquePartition& blocks);

ConflictGraph conflict_graph(const Instance& inst);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_INSTANCE_HPP
