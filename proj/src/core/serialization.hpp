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

#ifndef GOSSIPNET_CORE_SERIALIZATION_HPP
#define GOSSIPNET_CORE_SERIALIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "construct.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "instance.hpp"
#include "reductions.hpp"
#include "stability.hpp"
#include "welfare.hpp"

namespace gossip {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to ErrorCode::kParse.
Json parse_json(const std::string& text);

Json utility_to_json(Utility u);
Utility utility_from_json(const Json& j);

/// Unlisted pairs take "default", the most frequent off-diagonal value.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

/// Blocks form when every component is a clique, edge list otherwise.
Json network_to_json(const Network& net);
Network network_from_json(const Json& j);
std::string serialize_network(const Network& net);
Network parse_network(const std::string& text);

/// {"n": .., "edges": [[i, j], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json partition_to_json(const CliquePartition& p);
CliquePartition partition_from_json(int n, const Json& j);

Json defection_to_json(const Defection& d);
Defection defection_from_json(const Json& j);
Json report_to_json(const DefectionReport& r);

Json welfare_report_to_json(const WelfareReport& r);
Json bichromatic_to_json(const BichromaticGraph& k);
Json tpg_to_json(const TrianglePartitionedGraph& t);

Json preferences_to_json(const Preferences& p);
Preferences preferences_from_json(const Json& j);

/// One JSON object per state: step, move, potential, network.
std::vector<std::string> trajectory_lines(const Trajectory& t);

/// An instance optionally travelling with a network and a move schedule:
/// {"instance": .., "network": .., "schedule": [..]}. A bare instance
/// document parses as a bundle with neither.
struct Bundle {
  Instance instance;
  std::optional<Network> network;
  std::optional<std::vector<Defection>> schedule;
};

Json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const Json& j);
std::string serialize_bundle(const Bundle& b);
Bundle parse_bundle(const std::string& text);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_SERIALIZATION_HPP
