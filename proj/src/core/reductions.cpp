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

#include "reductions.hpp"

#include <algorithm>
#include <string>

#include "coloring.hpp"
#include "error.hpp"

namespace gossip {

Graph BichromaticGraph::support() const {
  std::vector<Edge> all = red.edges();
  all.insert(all.end(), blue.edges().begin(), blue.edges().end());
  return Graph(size(), std::move(all));
}

TrianglePartitionedGraph reduce_3col_to_3ctpg(const Graph& h) {
  const int n = h.size();
  std::vector<Edge> edges;
  TrianglePartitionedGraph out;
  for (Agent v = 0; v < n; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
    out.triples.push_back({3 * v, 3 * v + 1, 3 * v + 2});
  }
  for (const Edge& e : h.edges()) edges.emplace_back(3 * e.a, 3 * e.b);
  out.graph = Graph(3 * n, std::move(edges));
  return out;
}

BichromaticGraph reduce_3ctpg_to_scbg(const TrianglePartitionedGraph& tpg) {
  const Graph& h = tpg.graph;
  std::vector<int> seen(static_cast<std::size_t>(h.size()), 0);
  std::vector<Edge> red;
  for (const auto& t : tpg.triples) {
    for (Agent v : t) {
      if (v < 0 || v >= h.size() || seen[v]++ != 0) {
        throw Error(ErrorCode::kInvalid, "triples do not partition the nodes");
      }
    }
    for (int x = 0; x < 3; ++x) {
      for (int y = x + 1; y < 3; ++y) {
        if (!h.has_edge(t[x], t[y])) {
          throw Error(ErrorCode::kInvalid, "triple {" + std::to_string(t[0]) + "," +
                                               std::to_string(t[1]) + "," +
                                               std::to_string(t[2]) + "} is not a triangle");
        }
        red.emplace_back(t[x], t[y]);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) {
    throw Error(ErrorCode::kInvalid, "triples do not cover every node");
  }
  return {Graph(h.size(), std::move(red)), Graph(h.size(), h.edges())};
}

namespace {

// Per node and block: does the node have a red / blue edge into the block.
class StableColoringCheck {
 public:
  StableColoringCheck(const BichromaticGraph& k, ColoringRule rule)
      : red_(k.red.adjacency()), blue_(k.blue.adjacency()), edges_(k.support().edges()) {
    if (rule == ColoringRule::kAllPairs) {
      pairs_.clear();
      for (Agent v = 0; v < k.size(); ++v) {
        for (Agent w = v + 1; w < k.size(); ++w) pairs_.emplace_back(v, w);
      }
    } else {
      pairs_ = edges_;
    }
  }

  static bool touches(const std::vector<Agent>& nbrs, const std::vector<int>& block, int b) {
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Agent u) { return block[u] == b; });
  }

  bool edge_ok(const Edge& e, const std::vector<int>& block) const {
    const int bi = block[e.a];
    const int bj = block[e.b];
    if (bi == bj) return true;
    const int kinds = touches(red_[e.a], block, bj) + touches(blue_[e.a], block, bj) +
                      touches(red_[e.b], block, bi) + touches(blue_[e.b], block, bi);
    return kinds >= 3;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Edge>& pairs() const { return pairs_; }
  const std::vector<std::vector<Agent>>& red() const { return red_; }
  const std::vector<std::vector<Agent>>& blue() const { return blue_; }

 private:
  std::vector<std::vector<Agent>> red_;
  std::vector<std::vector<Agent>> blue_;
  std::vector<Edge> edges_;
  std::vector<Edge> pairs_;
};

}  // namespace

bool verify_stable_coloring(const BichromaticGraph& k, const CliquePartition& partition,
                            ColoringRule rule) {
  if (partition.size() != k.size()) {
    throw Error(ErrorCode::kInvalid, "partition and graph sizes differ");
  }
  const std::vector<int> block = partition.block_index();
  const StableColoringCheck check(k, rule);
  for (const Edge& e : check.edges()) {
    if (block[e.a] == block[e.b]) {
      throw Error(ErrorCode::kInvalid, "block holds the edge (" + std::to_string(e.a) + "," +
                                           std::to_string(e.b) + ")");
    }
  }
  return std::all_of(check.pairs().begin(), check.pairs().end(),
                     [&](const Edge& e) { return check.edge_ok(e, block); });
}

std::int64_t matching_weight(const BichromaticGraph& k) { return 2 * std::int64_t{k.size()} + 1; }

Instance reduce_scbg_to_matching_instance(const BichromaticGraph& k) {
  const int n = k.size();
  UtilityTable t(2 * n, 1);
  const std::int64_t c = matching_weight(k);
  std::vector<std::string> labels;
  for (Agent v = 0; v < n; ++v) {
    t.set_pair(2 * v, 2 * v + 1, c);
    labels.push_back("x" + std::to_string(v));
    labels.push_back("y" + std::to_string(v));
  }
  for (const Edge& e : k.red.edges()) t.set_pair(2 * e.a, 2 * e.b, Utility::neg_inf());
  for (const Edge& e : k.blue.edges()) t.set_pair(2 * e.a + 1, 2 * e.b + 1, Utility::neg_inf());
  return Instance(std::move(t), true, std::move(labels));
}

std::optional<CliquePartition> decode_matching_partition(const CliquePartition& p) {
  if (p.size() % 2 != 0) return std::nullopt;
  const std::vector<int> block = p.block_index();
  std::vector<std::vector<Agent>> out;
  std::vector<int> remap(p.block_count(), -1);
  for (Agent v = 0; v < p.size() / 2; ++v) {
    const int b = block[2 * v];
    if (block[2 * v + 1] != b) return std::nullopt;
    if (remap[b] < 0) {
      remap[b] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[remap[b]].push_back(v);
  }
  return CliquePartition(p.size() / 2, std::move(out));
}

std::optional<CliquePartition> stable_coloring_search(const BichromaticGraph& k,
                                                      const OracleOptions& options,
                                                      ColoringRule rule) {
  const int n = k.size();
  if (n > options.oracle_bound) {
    throw Error(ErrorCode::kOracleBound,
                "graph has " + std::to_string(n) + " nodes, above the oracle bound of " +
                    std::to_string(options.oracle_bound));
  }
  const StableColoringCheck check(k, rule);
  const auto adj = k.support().adjacency();
  // A pair is decided once every node next to either endpoint is placed.
  std::vector<std::vector<Edge>> ready(static_cast<std::size_t>(n));
  for (const Edge& e : check.pairs()) {
    Agent last = e.b;
    for (Agent u : adj[e.a]) last = std::max(last, u);
    for (Agent u : adj[e.b]) last = std::max(last, u);
    ready[last].push_back(e);
  }
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  int blocks = 0;
  std::optional<CliquePartition> found;
  const auto place = [&](auto&& self, Agent v) -> bool {
    if (v == n) {
      std::vector<std::vector<Agent>> out(static_cast<std::size_t>(blocks));
      for (Agent a = 0; a < n; ++a) out[block[a]].push_back(a);
      found = CliquePartition(n, std::move(out));
      return true;
    }
    for (int b = 0; b <= blocks; ++b) {
      if (std::any_of(adj[v].begin(), adj[v].end(), [&](Agent u) { return block[u] == b; })) {
        continue;
      }
      block[v] = b;
      const bool opened = b == blocks;
      if (opened) ++blocks;
      const bool ok = std::all_of(ready[v].begin(), ready[v].end(),
                                  [&](const Edge& e) { return check.edge_ok(e, block); });
      if (ok && self(self, v + 1)) return true;
      if (opened) --blocks;
      block[v] = -1;
    }
    return false;
  };
  place(place, 0);
  return found;
}

bool is_three_colorable(const Graph& h) { return k_coloring(h, 3).has_value(); }

}  // namespace gossip
