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

#ifndef GOSSIPNET_CORE_REDUCTIONS_HPP
#define GOSSIPNET_CORE_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "stability.hpp"

namespace gossip {

/// Red and blue edge sets over the same nodes; a pair may carry both.
struct BichromaticGraph {
  Graph red;
  Graph blue;

  int size() const { return red.size(); }
  /// Union of both colors.
  Graph support() const;
  friend bool operator==(const BichromaticGraph&, const BichromaticGraph&) = default;
};

struct TrianglePartitionedGraph {
  Graph graph;
  std::vector<std::array<Agent, 3>> triples;
};

/// Node v becomes 3v, with companions 3v + 1 and 3v + 2 closing a triangle.
TrianglePartitionedGraph reduce_3col_to_3ctpg(const Graph& h);

/// Triples become red-and-blue triangles; every other edge is blue only.
/// Throws ErrorCode::kInvalid if the triples do not partition the nodes
/// into triangles.
BichromaticGraph reduce_3ctpg_to_scbg(const TrianglePartitionedGraph& tpg);

/// Which pairs (v, w) in different blocks the three-of-four rule applies to.
enum class ColoringRule { kEdges, kAllPairs };

/// True iff every edge (v, w) with v in S_i, w in S_j has at least three of:
/// red v->S_j, blue v->S_j, red w->S_i, blue w->S_i. kAllPairs applies the
/// same test to every pair split across blocks. Throws ErrorCode::kInvalid
/// when a block contains an edge of either color.
bool verify_stable_coloring(const BichromaticGraph& k, const CliquePartition& partition,
                            ColoringRule rule = ColoringRule::kEdges);

/// Nodes x_v = 2v and y_v = 2v + 1 with u(x_v, y_v) = 2n + 1; red edges
/// make (x_v, x_w) enemies, blue edges (y_v, y_w); every other pair is 1.
Instance reduce_scbg_to_matching_instance(const BichromaticGraph& k);
std::int64_t matching_weight(const BichromaticGraph& k);

/// Maps a partition of the matching instance back to K when each x_v
/// shares its block with y_v.
std::optional<CliquePartition> decode_matching_partition(const CliquePartition& p);

/// First stable coloring in canonical partition order, or none. Throws
/// ErrorCode::kOracleBound above options.oracle_bound nodes.
std::optional<CliquePartition> stable_coloring_search(const BichromaticGraph& k,
                                                      const OracleOptions& options = {},
                                                      ColoringRule rule = ColoringRule::kEdges);

bool is_three_colorable(const Graph& h);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_REDUCTIONS_HPP
