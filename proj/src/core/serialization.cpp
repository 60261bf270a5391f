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

#include "serialization.hpp"

#include <map>
#include <set>

#include "error.hpp"

namespace gossip {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Agent as_agent(const Json& j, int n, const char* what) {
  const std::int64_t v = as_int(j, what);
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kInvalid,
                std::string(what) + " " + std::to_string(v) + " outside [0, " +
                    std::to_string(n) + ")");
  }
  return static_cast<Agent>(v);
}

int read_n(const Json& j) {
  const std::int64_t n = as_int(field(j, "n"), "n");
  if (n < 0 || n > (1 << 20)) throw Error(ErrorCode::kInvalid, "n out of range");
  return static_cast<int>(n);
}

std::vector<Agent> agents_from_json(const Json& j, int n) {
  if (!j.is_array()) schema("expected an array of agents");
  std::vector<Agent> out;
  for (const Json& a : j) out.push_back(as_agent(a, n, "agent"));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Json utility_to_json(Utility u) {
  if (u.is_neg_inf()) return "-inf";
  return u.value();
}

Utility utility_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "-inf") return Utility::neg_inf();
    schema("utility string must be \"-inf\"");
  }
  const std::int64_t v = as_int(j, "utility");
  if (v > Utility::kMaxPairMagnitude || v < -Utility::kMaxPairMagnitude) {
    throw Error(ErrorCode::kInvalid, "utility " + std::to_string(v) + " exceeds 2^31");
  }
  return v;
}

Json instance_to_json(const Instance& inst) {
  const int n = inst.size();
  std::map<std::int64_t, std::int64_t> freq;
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = 0; j < n; ++j) {
      if (i != j) ++freq[inst.u(i, j).raw()];
    }
  }
  Utility def = 1;
  std::int64_t best = -1;
  for (const auto& [raw, count] : freq) {
    if (count > best) {
      best = count;
      def = raw == Utility::neg_inf().raw() ? Utility::neg_inf() : Utility(raw);
    }
  }
  Json pairs = Json::array();
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = i + 1; j < n; ++j) {
      const Utility uij = inst.u(i, j);
      const Utility uji = inst.u(j, i);
      if (uij == def && uji == def) continue;
      Json p;
      p["i"] = i;
      p["j"] = j;
      p["u_ij"] = utility_to_json(uij);
      if (uji != uij) p["u_ji"] = utility_to_json(uji);
      pairs.push_back(std::move(p));
    }
  }
  Json out;
  out["n"] = n;
  out["symmetric"] = inst.symmetric();
  out["default"] = utility_to_json(def);
  out["pairs"] = std::move(pairs);
  if (!inst.labels().empty()) out["labels"] = inst.labels();
  return out;
}

Instance instance_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& sym = field(j, "symmetric");
  if (!sym.is_boolean()) schema("\"symmetric\" must be a boolean");
  UtilityTable t(n, utility_from_json(field(j, "default")));
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) schema("\"pairs\" must be an array");
  std::set<Edge> seen;
  for (const Json& p : pairs) {
    Agent a = as_agent(field(p, "i"), n, "i");
    Agent b = as_agent(field(p, "j"), n, "j");
    if (a == b) throw Error(ErrorCode::kInvalid, "pair with i == j");
    if (!seen.insert(Edge(a, b)).second) {
      throw Error(ErrorCode::kInvalid, "duplicate pair (" + std::to_string(a) + "," +
                                           std::to_string(b) + ")");
    }
    const Utility uab = utility_from_json(field(p, "u_ij"));
    const auto it = p.find("u_ji");
    const Utility uba = it == p.end() ? uab : utility_from_json(*it);
    t.set(a, b, uab);
    t.set(b, a, uba);
  }
  std::vector<std::string> labels;
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) schema("\"labels\" must be an array");
    for (const Json& l : *it) {
      if (!l.is_string()) schema("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Instance(std::move(t), sym.get<bool>(), std::move(labels));
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(); }
Instance parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

Json partition_to_json(const CliquePartition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(b);
  return out;
}

CliquePartition partition_from_json(int n, const Json& j) {
  if (!j.is_array()) schema("\"blocks\" must be an array");
  std::vector<std::vector<Agent>> blocks;
  for (const Json& b : j) blocks.push_back(agents_from_json(b, n));
  return CliquePartition(n, std::move(blocks));
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["n"] = g.size();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const Json& j) {
  const int n = read_n(j);
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) schema("\"edges\" must be an array");
  std::vector<Edge> out;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) schema("edge must be a pair [i, j]");
    const Agent a = as_agent(e[0], n, "endpoint");
    const Agent b = as_agent(e[1], n, "endpoint");
    if (a == b) throw Error(ErrorCode::kInvalid, "self-loop on " + std::to_string(a));
    out.emplace_back(a, b);
  }
  return Graph(n, std::move(out));
}

Json network_to_json(const Network& net) {
  if (!is_clique_partition(net)) return graph_to_json(net);
  Json out;
  out["n"] = net.size();
  out["blocks"] = partition_to_json(components(net));
  return out;
}

Network network_from_json(const Json& j) {
  if (j.is_object() && j.contains("blocks")) {
    return network_from_partition(partition_from_json(read_n(j), j["blocks"]));
  }
  const Graph g = graph_from_json(j);
  return Network(g.size(), g.edges());
}

std::string serialize_network(const Network& net) { return network_to_json(net).dump(); }
Network parse_network(const std::string& text) { return network_from_json(parse_json(text)); }

Json defection_to_json(const Defection& d) {
  Json out;
  out["participants"] = d.participants;
  Json attached = Json::array();
  for (const auto& c : d.attached) attached.push_back(c);
  out["attached"] = std::move(attached);
  return out;
}

Defection defection_from_json(const Json& j) {
  constexpr int kAny = 1 << 20;
  Defection d;
  d.participants = agents_from_json(field(j, "participants"), kAny);
  if (const auto it = j.find("attached"); it != j.end()) {
    if (!it->is_array()) schema("\"attached\" must be an array");
    for (const Json& c : *it) d.attached.push_back(agents_from_json(c, kAny));
  }
  return d;
}

Json report_to_json(const DefectionReport& r) {
  Json out = defection_to_json(r.defection);
  Json before = Json::array();
  Json after = Json::array();
  for (Utility u : r.before) before.push_back(utility_to_json(u));
  for (Utility u : r.after) after.push_back(utility_to_json(u));
  out["before"] = std::move(before);
  out["after"] = std::move(after);
  return out;
}

namespace {

Json metric_value(const WelfareReport& r, std::int64_t v) {
  if (r.metric == Metric::kComponentCount) return v;
  if (v % 2 == 0) return v / 2;
  return static_cast<double>(v) / 2.0;
}

Json scored_to_json(const WelfareReport& r, const std::optional<Scored>& s) {
  if (!s) return nullptr;
  Json out;
  out["value"] = metric_value(r, s->value);
  out["witness"] = partition_to_json(s->witness);
  return out;
}

}  // namespace

Json welfare_report_to_json(const WelfareReport& r) {
  Json out;
  out["metric"] = metric_name(r.metric);
  out["k"] = r.k;
  out["optimum"] = scored_to_json(r, r.optimum);
  out["stable_count"] = r.stable_count;
  out["nonexistent"] = r.nonexistent();
  out["best_stable"] = scored_to_json(r, r.best_stable);
  out["worst_stable"] = scored_to_json(r, r.worst_stable);
  out["pos"] = r.pos ? Json(r.pos->to_string()) : Json(nullptr);
  out["poa"] = r.poa ? Json(r.poa->to_string()) : Json(nullptr);
  return out;
}

Json bichromatic_to_json(const BichromaticGraph& k) {
  Json out;
  out["n"] = k.size();
  out["red"] = graph_to_json(k.red)["edges"];
  out["blue"] = graph_to_json(k.blue)["edges"];
  return out;
}

Json tpg_to_json(const TrianglePartitionedGraph& t) {
  Json out = graph_to_json(t.graph);
  Json triples = Json::array();
  for (const auto& tr : t.triples) triples.push_back({tr[0], tr[1], tr[2]});
  out["triples"] = std::move(triples);
  return out;
}

Json preferences_to_json(const Preferences& p) {
  Json out;
  out["men"] = p.men;
  out["women"] = p.women;
  return out;
}

Preferences preferences_from_json(const Json& j) {
  Preferences p;
  const auto lists = [](const Json& side) {
    if (!side.is_array()) schema("preference side must be an array of lists");
    std::vector<std::vector<int>> out;
    for (const Json& l : side) out.push_back(agents_from_json(l, 1 << 20));
    return out;
  };
  p.men = lists(field(j, "men"));
  p.women = lists(field(j, "women"));
  p.validate();
  return p;
}

std::vector<std::string> trajectory_lines(const Trajectory& t) {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    Json line;
    line["step"] = s;
    if (s == 0) {
      line["move"] = nullptr;
    } else {
      const Move& m = t.moves[s - 1];
      line["move"] = m.label;
      if (m.defection) line["defection"] = defection_to_json(*m.defection);
    }
    line["potential_kind"] = potential_name(t.potential);
    line["potential"] = utility_to_json(t.potentials[s]);
    line["network"] = network_to_json(t.states[s]);
    if (t.cycle && s + 1 == t.states.size()) line["repeats_step"] = t.cycle_start;
    out.push_back(line.dump());
  }
  return out;
}

Json bundle_to_json(const Bundle& b) {
  Json out;
  out["instance"] = instance_to_json(b.instance);
  if (b.network) out["network"] = network_to_json(*b.network);
  if (b.schedule) {
    Json moves = Json::array();
    for (const Defection& d : *b.schedule) moves.push_back(defection_to_json(d));
    out["schedule"] = std::move(moves);
  }
  return out;
}

Bundle bundle_from_json(const Json& j) {
  if (!j.is_object()) schema("expected a JSON object");
  if (!j.contains("instance")) return {instance_from_json(j), std::nullopt, std::nullopt};
  Bundle b{instance_from_json(j["instance"]), std::nullopt, std::nullopt};
  if (j.contains("network")) {
    b.network = network_from_json(j["network"]);
    if (b.network->size() != b.instance.size()) {
      throw Error(ErrorCode::kInvalid, "network and instance sizes differ");
    }
  }
  if (j.contains("schedule")) {
    if (!j["schedule"].is_array()) schema("\"schedule\" must be an array");
    b.schedule.emplace();
    for (const Json& d : j["schedule"]) b.schedule->push_back(defection_from_json(d));
  }
  return b;
}

std::string serialize_bundle(const Bundle& b) { return bundle_to_json(b).dump(); }
Bundle parse_bundle(const std::string& text) { return bundle_from_json(parse_json(text)); }

}  // namespace gossip
