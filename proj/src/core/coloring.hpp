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

#ifndef GOSSIPNET_CORE_COLORING_HPP
#define GOSSIPNET_CORE_COLORING_HPP

#include <optional>
#include <vector>

#include "graph.hpp"

namespace gossip {

struct Coloring {
  int colors = 0;
  /// color[v] in 0..colors-1, numbered by first appearance in vertex order.
  std::vector<int> color;
};

/// Proper coloring with at most k colors, if one exists. Exact backtracking.
std::optional<Coloring> k_coloring(const Graph& h, int k);

/// Exact chromatic number with a witness. Edgeless and bipartite graphs are
/// answered directly; otherwise colors are tried upward from a clique lower
/// bound, and graphs above `bound` vertices throw ErrorCode::kOracleBound.
Coloring chromatic_number(const Graph& h, int bound);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_COLORING_HPP
