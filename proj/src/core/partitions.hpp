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

#ifndef GOSSIPNET_CORE_PARTITIONS_HPP
#define GOSSIPNET_CORE_PARTITIONS_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace gossip {

using AgentMask = std::uint64_t;

/// Agents that the set enumerators can address with a single mask.
inline constexpr int kMaxMaskAgents = 64;

inline AgentMask bit(Agent a) { return AgentMask{1} << a; }

template <class Fn>
void for_each_bit(AgentMask mask, Fn&& fn) {
  while (mask != 0) {
    fn(static_cast<Agent>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

std::vector<Agent> mask_members(AgentMask mask);
AgentMask mask_of(const std::vector<Agent>& members);
CliquePartition partition_from_masks(int n, const std::vector<AgentMask>& blocks);
std::vector<AgentMask> partition_masks(const CliquePartition& partition);

/// Restrictions applied while growing a partition.
struct PartitionConstraints {
  /// conflicts[i]: agents that may never share a block with i. Empty means none.
  std::vector<AgentMask> conflicts;
  /// partner[i] >= 0 forces i and partner[i] into the same block.
  std::vector<Agent> partner;
};

/// Receives the blocks of each partition; return false to stop.
using PartitionVisitor = std::function<bool(const std::vector<AgentMask>&)>;

/// Visits every set partition of 0..n-1 honouring `constraints`, in
/// restricted-growth-string order: agent i joins existing blocks in
/// creation order before opening a new one. Returns false when stopped
/// early by the visitor. Requires n <= kMaxMaskAgents.
bool for_each_partition(int n, const PartitionConstraints& constraints,
                        const PartitionVisitor& visit);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_PARTITIONS_HPP
