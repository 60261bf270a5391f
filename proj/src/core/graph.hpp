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

#ifndef GOSSIPNET_CORE_GRAPH_HPP
#define GOSSIPNET_CORE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gossip {

using Agent = int;

/// Unordered pair stored with a < b.
struct Edge {
  Agent a = 0;
  Agent b = 0;

  Edge() = default;
  Edge(Agent x, Agent y) : a(x < y ? x : y), b(x < y ? y : x) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on agents 0..n-1 with a sorted, duplicate-free
/// edge list. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}
  /// Throws ErrorCode::kInvalid on self-loops or endpoints outside [0, n).
  /// Duplicate edges are merged.
  Graph(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Agent x, Agent y) const;
  std::vector<std::vector<Agent>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Information-sharing network.
class Network : public Graph {
 public:
  using Graph::Graph;
  friend bool operator==(const Network&, const Network&) = default;
};

/// Enemy pairs: {i, j} whenever either direction of the utility is -inf.
class ConflictGraph : public Graph {
 public:
  using Graph::Graph;
  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;
};

/// Disjoint, exhaustive blocks over 0..n-1, each sorted, ordered by
/// smallest member.
class CliquePartition {
 public:
  CliquePartition() = default;
  /// Normalizes order; throws ErrorCode::kInvalid unless the blocks are
  /// nonempty and partition 0..n-1.
  CliquePartition(int n, std::vector<std::vector<Agent>> blocks);

  static CliquePartition singletons(int n);

  int size() const { return n_; }
  const std::vector<std::vector<Agent>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// Index of the block holding each agent.
  std::vector<int> block_index() const;
  std::vector<int> block_sizes() const;

  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Agent>> blocks_;
};

CliquePartition components(const Network& net);

/// Complete graph on every component; components are preserved.
Network cliqueify(const Network& net);

Network network_from_partition(const CliquePartition& partition);

/// True when every connected component is complete.
bool is_clique_partition(const Network& net);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_GRAPH_HPP
