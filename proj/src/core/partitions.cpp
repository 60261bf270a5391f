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

#include "partitions.hpp"

#include "error.hpp"

namespace gossip {

std::vector<Agent> mask_members(AgentMask mask) {
  std::vector<Agent> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for_each_bit(mask, [&](Agent a) { out.push_back(a); });
  return out;
}

AgentMask mask_of(const std::vector<Agent>& members) {
  AgentMask m = 0;
  for (Agent a : members) m |= bit(a);
  return m;
}

CliquePartition partition_from_masks(int n, const std::vector<AgentMask>& blocks) {
  std::vector<std::vector<Agent>> out;
  out.reserve(blocks.size());
  for (AgentMask b : blocks) out.push_back(mask_members(b));
  return CliquePartition(n, std::move(out));
}

std::vector<AgentMask> partition_masks(const CliquePartition& partition) {
  if (partition.size() > kMaxMaskAgents) {
    throw Error(ErrorCode::kInvalid, "partition has more than 64 agents");
  }
  std::vector<AgentMask> out;
  out.reserve(partition.block_count());
  for (const auto& b : partition.blocks()) out.push_back(mask_of(b));
  return out;
}

namespace {

class PartitionWalker {
 public:
  PartitionWalker(int n, const PartitionConstraints& c, const PartitionVisitor& visit)
      : n_(n), c_(c), visit_(visit), owner_(static_cast<std::size_t>(n), -1) {
    blocks_.reserve(static_cast<std::size_t>(n));
  }

  bool run() { return place(0); }

 private:
  AgentMask conflicts(Agent a) const { return c_.conflicts.empty() ? 0 : c_.conflicts[a]; }
  Agent partner(Agent a) const { return c_.partner.empty() ? -1 : c_.partner[a]; }

  bool place(Agent a) {
    if (a == n_) return visit_(blocks_);
    const Agent p = partner(a);
    if (p >= 0 && p < a) {
      const int b = owner_[p];
      if ((blocks_[b] & conflicts(a)) != 0) return true;
      return descend(a, b);
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if ((blocks_[b] & conflicts(a)) != 0) continue;
      if (!descend(a, static_cast<int>(b))) return false;
    }
    blocks_.push_back(0);
    const bool go_on = descend(a, static_cast<int>(blocks_.size()) - 1);
    blocks_.pop_back();
    return go_on;
  }

  bool descend(Agent a, int b) {
    blocks_[b] |= bit(a);
    owner_[a] = b;
    const bool go_on = place(a + 1);
    blocks_[b] &= ~bit(a);
    owner_[a] = -1;
    return go_on;
  }

  int n_;
  const PartitionConstraints& c_;
  const PartitionVisitor& visit_;
  std::vector<AgentMask> blocks_;
  std::vector<int> owner_;
};

}  // namespace

bool for_each_partition(int n, const PartitionConstraints& constraints,
                        const PartitionVisitor& visit) {
  if (n < 0 || n > kMaxMaskAgents) {
    throw Error(ErrorCode::kInvalid, "partition enumeration supports 0..64 agents");
  }
  if (n == 0) return visit({});
  PartitionWalker walker(n, constraints, visit);
  return walker.run();
}

}  // namespace gossip
