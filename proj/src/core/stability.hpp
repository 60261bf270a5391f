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

#ifndef GOSSIPNET_CORE_STABILITY_HPP
#define GOSSIPNET_CORE_STABILITY_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "partitions.hpp"

namespace gossip {

/// A set S of agents forming every pairwise edge among themselves and each
/// deleting incident edges. Kept edges are described by the residual
/// components (components after removing every edge touching S) that stay
/// attached to S.
struct Defection {
  std::vector<Agent> participants;
  std::vector<std::vector<Agent>> attached;

  friend bool operator==(const Defection&, const Defection&) = default;
};

/// Utilities are aligned with `defection.participants`.
struct DefectionReport {
  Defection defection;
  std::vector<Utility> before;
  std::vector<Utility> after;

  friend bool operator==(const DefectionReport&, const DefectionReport&) = default;
};

/// Ceilings for the exhaustive oracles.
struct OracleOptions {
  int oracle_bound = 14;    // agents, for partition enumeration
  int mis_bound = 48;       // vertices, for exact independent set on non-bipartite graphs
  int coloring_bound = 40;  // vertices, for exact coloring on non-bipartite graphs
};

/// Components of `net` minus every edge incident to S, over V \ S, in
/// canonical order.
std::vector<std::vector<Agent>> residual_components(const Network& net,
                                                    std::span<const Agent> participants);

/// Literal realization: participants keep their edges into attached
/// components, drop edges into the others, and form every edge within S.
/// Throws ErrorCode::kInvalid if an attachment is not a residual component
/// holding an original neighbor of S.
Network apply_defection(const Network& net, const Defection& d);

/// Returns false to stop the enumeration.
using DefectionVisitor = std::function<bool(const DefectionReport&)>;

/// Exact improving-defection search over one instance. Search order is
/// |S| ascending, S lexicographic, then attachment sets by ascending size
/// and lexicographic within a size. Supports up to 64 agents.
class DefectionSearch {
 public:
  explicit DefectionSearch(const Instance& inst);

  std::optional<DefectionReport> first(const Network& net, int k) const;
  std::optional<DefectionReport> first(const std::vector<AgentMask>& blocks, int k) const;
  bool stable(const std::vector<AgentMask>& blocks, int k) const {
    return !first(blocks, k).has_value();
  }
  /// Visits every improving defection with at most k participants.
  void for_each(const Network& net, int k, const DefectionVisitor& visit) const;

 private:
  struct View;
  bool search(const View& view, int k, const DefectionVisitor& visit) const;
  bool evaluate(const View& view, AgentMask s, const std::vector<Agent>& members,
                const DefectionVisitor& visit) const;
  std::int64_t u(Agent i, Agent j) const { return table_[static_cast<std::size_t>(i * n_ + j)]; }

  int n_ = 0;
  std::vector<std::int64_t> table_;
  std::vector<AgentMask> enemies_;
  std::vector<std::int64_t> cap_;
};

std::optional<DefectionReport> find_improving_defection(const Instance& inst,
                                                        const Network& net, int k);

struct StabilityVerdict {
  bool stable = true;
  std::optional<DefectionReport> witness;
};

StabilityVerdict is_k_stable(const Instance& inst, const Network& net, int k);

/// Polynomial single-agent deviation: keep exactly the adjacent residual
/// components with positive marginal utility.
std::optional<DefectionReport> best_unilateral_deviation(const Instance& inst,
                                                         const Network& net, Agent i);

/// Candidate record for the existence oracle's trace.
struct ExaminedCandidate {
  CliquePartition partition;
  std::optional<DefectionReport> witness;
};

/// Partition constraints that every k-stable clique partition satisfies:
/// no block holds an enemy pair, and (for k >= 2) bonded pairs share a
/// block. A pair is bonded when each side values the other more than the
/// sum of all its other positive utilities, so separated partners always
/// defect together.
PartitionConstraints stability_constraints(const Instance& inst, int k);

/// Visits every k-stable clique partition in canonical order.
/// Throws ErrorCode::kOracleBound above options.oracle_bound agents.
void for_each_stable_partition(const Instance& inst, int k, const OracleOptions& options,
                               const std::function<bool(const CliquePartition&)>& visit);

/// First k-stable clique partition in canonical order, as a network.
std::optional<Network> exists_stable_network(const Instance& inst, int k,
                                             const OracleOptions& options = {},
                                             std::vector<ExaminedCandidate>* log = nullptr);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_STABILITY_HPP
