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

#ifndef GOSSIPNET_CORE_INDEPENDENT_SET_HPP
#define GOSSIPNET_CORE_INDEPENDENT_SET_HPP

#include <vector>

#include "graph.hpp"

namespace gossip {

/// Maximum independent set of the subgraph induced by `candidates`; among
/// all maximum sets, the one whose sorted member list is lexicographically
/// smallest. Bipartite subgraphs are solved through maximum matching;
/// other subgraphs by branch and bound, which throws ErrorCode::kOracleBound
/// when the subgraph has more than `bound` vertices.
std::vector<Agent> max_independent_set(const Graph& h, const std::vector<Agent>& candidates,
                                       int bound);

std::vector<Agent> max_independent_set(const Graph& h, int bound);

bool is_independent(const Graph& h, const std::vector<Agent>& members);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_INDEPENDENT_SET_HPP
