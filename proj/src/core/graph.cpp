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

#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace gossip {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorCode::kInvalid, "negative agent count");
  for (const Edge& e : edges_) {
    if (e.a == e.b) {
      throw Error(ErrorCode::kInvalid, "self-loop on agent " + std::to_string(e.a));
    }
    if (e.a < 0 || e.b >= n_) {
      throw Error(ErrorCode::kInvalid, "edge (" + std::to_string(e.a) + "," +
                                           std::to_string(e.b) +
                                           ") outside agent range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Agent x, Agent y) const {
  if (x == y) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(x, y));
}

std::vector<std::vector<Agent>> Graph::adjacency() const {
  std::vector<std::vector<Agent>> adj(static_cast<std::size_t>(n_));
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

CliquePartition::CliquePartition(int n, std::vector<std::vector<Agent>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::kInvalid, "empty block in partition");
    std::sort(block.begin(), block.end());
    for (Agent a : block) {
      if (a < 0 || a >= n_) {
        throw Error(ErrorCode::kInvalid, "agent " + std::to_string(a) + " out of range");
      }
      if (seen[a]) {
        throw Error(ErrorCode::kInvalid, "agent " + std::to_string(a) + " in two blocks");
      }
      seen[a] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::kInvalid, "partition does not cover every agent");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

CliquePartition CliquePartition::singletons(int n) {
  std::vector<std::vector<Agent>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (Agent i = 0; i < n; ++i) blocks.push_back({i});
  return CliquePartition(n, std::move(blocks));
}

std::vector<int> CliquePartition::block_index() const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Agent a : blocks_[b]) index[a] = static_cast<int>(b);
  }
  return index;
}

std::vector<int> CliquePartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

namespace {

Agent find_root(std::vector<Agent>& parent, Agent x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CliquePartition components(const Network& net) {
  const int n = net.size();
  std::vector<Agent> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : net.edges()) {
    const Agent ra = find_root(parent, e.a);
    const Agent rb = find_root(parent, e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Agent>> blocks;
  for (Agent i = 0; i < n; ++i) {
    const Agent r = find_root(parent, i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return CliquePartition(n, std::move(blocks));
}

Network network_from_partition(const CliquePartition& partition) {
  std::vector<Edge> edges;
  for (const auto& block : partition.blocks()) {
    for (std::size_t x = 0; x < block.size(); ++x) {
      for (std::size_t y = x + 1; y < block.size(); ++y) {
        edges.emplace_back(block[x], block[y]);
      }
    }
  }
  return Network(partition.size(), std::move(edges));
}

Network cliqueify(const Network& net) {
  return network_from_partition(components(net));
}

bool is_clique_partition(const Network& net) {
  std::size_t expected = 0;
  const CliquePartition parts = components(net);
  for (const auto& block : parts.blocks()) {
    expected += block.size() * (block.size() - 1) / 2;
  }
  return expected == net.edges().size();
}

}  // namespace gossip
