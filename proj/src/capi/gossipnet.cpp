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

#include "gossipnet/gossipnet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "construct.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "generators.hpp"
#include "reductions.hpp"
#include "serialization.hpp"
#include "stability.hpp"
#include "welfare.hpp"

struct gn_instance {
  gossip::Instance value;
};

struct gn_network {
  gossip::Network value;
};

struct gn_options {
  gossip::OracleOptions value;
};

namespace {

thread_local std::string last_error;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

gn_status code_of(gossip::ErrorCode c) {
  switch (c) {
    case gossip::ErrorCode::kParse: return GN_ERR_PARSE;
    case gossip::ErrorCode::kInvalid: return GN_ERR_INVALID;
    case gossip::ErrorCode::kOverflow: return GN_ERR_OVERFLOW;
    case gossip::ErrorCode::kOracleBound: return GN_ERR_ORACLE_BOUND;
    case gossip::ErrorCode::kNonConforming: return GN_ERR_NONCONFORMING;
    case gossip::ErrorCode::kNotImproving: return GN_ERR_NOT_IMPROVING;
    case gossip::ErrorCode::kNotOptimal: return GN_ERR_NOT_OPTIMAL;
    case gossip::ErrorCode::kInternal: return GN_ERR_INTERNAL;
  }
  return GN_ERR_INTERNAL;
}

template <class Fn>
gn_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const gossip::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const UsageError& e) {
    last_error = e.what();
    return GN_ERR_USAGE;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return GN_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GN_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw UsageError(what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gossip::OracleOptions opts(const gn_options* o) { return o ? o->value : gossip::OracleOptions{}; }

std::string text(const char* s) {
  require(s != nullptr, "null string argument");
  return s;
}

gossip::GeneratorParams params_from_json(const gossip::Json& j) {
  gossip::GeneratorParams p;
  if (j.is_null()) return p;
  require(j.is_object(), "generator parameters must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      p.n = v.get<int>();
    } else if (key == "rows" || key == "r") {
      p.rows = v.get<int>();
    } else if (key == "cols") {
      p.cols = v.get<int>();
    } else if (key == "k") {
      p.k = v.get<int>();
    } else if (key == "s") {
      p.s = v.get<int>();
    } else if (key == "c") {
      p.c = v.get<std::int64_t>();
    } else if (key == "p") {
      p.p = v.get<double>();
    } else if (key == "seed") {
      p.seed = v.get<std::uint64_t>();
    } else if (key == "pairs") {
      for (const auto& e : v) p.pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } else if (key == "prefs") {
      p.prefs = gossip::preferences_from_json(v);
    } else if (key == "graph") {
      const gossip::Graph g = gossip::graph_from_json(v);
      p.n = g.size();
      p.pairs = g.edges();
    } else {
      throw UsageError("unknown generator parameter '" + key + "'");
    }
  }
  return p;
}

gossip::Json schedule_json(const std::vector<gossip::Defection>& s) {
  gossip::Json out = gossip::Json::array();
  for (const auto& d : s) out.push_back(gossip::defection_to_json(d));
  return out;
}

std::vector<gossip::Defection> schedule_from_json(const gossip::Json& j) {
  require(j.is_array(), "schedule must be a JSON array");
  std::vector<gossip::Defection> out;
  for (const auto& d : j) out.push_back(gossip::defection_from_json(d));
  return out;
}

}  // namespace

extern "C" {

const char* gn_version(void) { return "1.0.0"; }

const char* gn_last_error(void) { return last_error.c_str(); }

const char* gn_status_name(gn_status status) {
  switch (status) {
    case GN_OK: return "ok";
    case GN_UNSTABLE: return "unstable";
    case GN_ERR_USAGE: return "usage";
    case GN_ERR_ORACLE_BOUND: return "oracle-bound";
    case GN_NONEXISTENT: return "nonexistent";
    case GN_ERR_PARSE: return "parse";
    case GN_ERR_INVALID: return "invalid";
    case GN_ERR_OVERFLOW: return "overflow";
    case GN_ERR_NONCONFORMING: return "nonconforming";
    case GN_ERR_NOT_IMPROVING: return "not-improving";
    case GN_ERR_NOT_OPTIMAL: return "not-optimal";
    case GN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void gn_string_free(char* s) { std::free(s); }

gn_options* gn_options_new(void) { return new (std::nothrow) gn_options{}; }
void gn_options_free(gn_options* o) { delete o; }
void gn_options_set_oracle_bound(gn_options* o, int agents) {
  if (o) o->value.oracle_bound = agents;
}
void gn_options_set_mis_bound(gn_options* o, int vertices) {
  if (o) o->value.mis_bound = vertices;
}
void gn_options_set_coloring_bound(gn_options* o, int vertices) {
  if (o) o->value.coloring_bound = vertices;
}

gn_status gn_instance_parse(const char* json, gn_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new gn_instance{gossip::parse_bundle(text(json)).instance};
    return GN_OK;
  });
}

gn_status gn_instance_serialize(const gn_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = dup(gossip::serialize_instance(inst->value));
    return GN_OK;
  });
}

int gn_instance_size(const gn_instance* inst) { return inst ? inst->value.size() : 0; }
void gn_instance_free(gn_instance* inst) { delete inst; }

gn_status gn_network_parse(const char* json, gn_network** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new gn_network{gossip::parse_network(text(json))};
    return GN_OK;
  });
}

gn_status gn_network_serialize(const gn_network* net, char** out) {
  return guarded([&] {
    require(net && out, "null argument");
    *out = dup(gossip::serialize_network(net->value));
    return GN_OK;
  });
}

int gn_network_size(const gn_network* net) { return net ? net->value.size() : 0; }
void gn_network_free(gn_network* net) { delete net; }

gn_status gn_bundle_split(const char* json, gn_instance** inst, gn_network** net,
                          char** schedule) {
  return guarded([&] {
    require(inst != nullptr, "null output pointer");
    gossip::Bundle b = gossip::parse_bundle(text(json));
    if (net) *net = b.network ? new gn_network{*b.network} : nullptr;
    if (schedule) *schedule = b.schedule ? dup(schedule_json(*b.schedule).dump()) : nullptr;
    *inst = new gn_instance{std::move(b.instance)};
    return GN_OK;
  });
}

gn_status gn_bundle_join(const gn_instance* inst, const gn_network* net, const char* schedule,
                         char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    gossip::Bundle b{inst->value, std::nullopt, std::nullopt};
    if (net) {
      if (net->value.size() != inst->value.size()) {
        throw gossip::Error(gossip::ErrorCode::kInvalid, "network and instance sizes differ");
      }
      b.network = net->value;
    }
    if (schedule) b.schedule = schedule_from_json(gossip::parse_json(schedule));
    *out = dup(gossip::serialize_bundle(b));
    return GN_OK;
  });
}

gn_status gn_generate(const char* family, const char* params, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const std::string name = text(family);
    bool known = false;
    for (const auto& f : gossip::generator_families()) known = known || f == name;
    require(known, ("unknown family '" + name + "'").c_str());
    const gossip::Json pj = params ? gossip::parse_json(params) : gossip::Json();
    const gossip::Generated g = gossip::generate(name, params_from_json(pj));
    *out = dup(gossip::serialize_bundle({g.instance, g.network, g.schedule}));
    return GN_OK;
  });
}

gn_status gn_families(char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    std::string s;
    for (const auto& f : gossip::generator_families()) s += f + "\n";
    *out = dup(s);
    return GN_OK;
  });
}

gn_status gn_solve(const gn_instance* inst, const char* alg, const gn_options* o,
                   gn_network** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    const std::string a = text(alg);
    const gossip::Instance& in = inst->value;
    gossip::Network net;
    if (a == "peel") {
      net = gossip::greedy_mis_peeling(in, opts(o));
    } else if (a == "dyn2") {
      net = gossip::two_stable_dynamics(in).final_state();
    } else if (a == "pot3" || a == "pot4") {
      net = gossip::potential_dynamics(in, a == "pot3" ? 3 : 4).final_state();
    } else if (a == "repair3") {
      gossip::require_friends_enemies(in, "3-stable repair");
      const auto opt = gossip::optimal_total_welfare(in, opts(o));
      net = gossip::three_stable_from_optimal(in, opt.witness).final_state();
    } else {
      throw UsageError("unknown algorithm '" + a + "' (peel, dyn2, pot3, pot4, repair3)");
    }
    *out = new gn_network{std::move(net)};
    return GN_OK;
  });
}

gn_status gn_verify(const gn_instance* inst, const gn_network* net, int k, char** witness) {
  return guarded([&] {
    require(inst && net && witness, "null argument");
    require(k >= 1, "k must be at least 1");
    if (net->value.size() != inst->value.size()) {
      throw gossip::Error(gossip::ErrorCode::kInvalid, "network and instance sizes differ");
    }
    const gossip::StabilityVerdict v = gossip::is_k_stable(inst->value, net->value, k);
    *witness = v.witness ? dup(gossip::report_to_json(*v.witness).dump()) : nullptr;
    return v.stable ? GN_OK : GN_UNSTABLE;
  });
}

gn_status gn_enumerate(const gn_instance* inst, int k, const gn_options* o, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    require(k >= 1, "k must be at least 1");
    const auto all = gossip::enumerate_stable_networks(inst->value, k, opts(o));
    gossip::Json j = gossip::Json::array();
    for (const auto& p : all) j.push_back(gossip::partition_to_json(p));
    *out = dup(j.dump());
    return all.empty() ? GN_NONEXISTENT : GN_OK;
  });
}

gn_status gn_welfare(const gn_instance* inst, int k, const char* metric, const gn_options* o,
                     char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    require(k >= 1, "k must be at least 1");
    const std::string m = text(metric);
    require(m == "utility" || m == "components", "metric must be utility or components");
    const auto r = gossip::welfare_report(
        inst->value, k,
        m == "utility" ? gossip::Metric::kTotalUtility : gossip::Metric::kComponentCount,
        opts(o));
    *out = dup(gossip::welfare_report_to_json(r).dump());
    return r.nonexistent() ? GN_NONEXISTENT : GN_OK;
  });
}

gn_status gn_reduce(const char* input, const char* from, const char* to, int solve,
                    const gn_options* o, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const std::string f = text(from);
    const std::string t = text(to);
    const auto stage = [](const std::string& s) {
      if (s == "3col") return 0;
      if (s == "3ctpg") return 1;
      if (s == "scbg") return 2;
      if (s == "matching") return 3;
      return -1;
    };
    const int a = stage(f);
    const int b = stage(t);
    require(a >= 0 && a <= 2, "--from must be 3col, 3ctpg or scbg");
    require(b >= 1 && b > a, "--to must be a later stage: 3ctpg, scbg or matching");
    const gossip::Json in = gossip::parse_json(text(input));
    const gossip::OracleOptions options = opts(o);
    gossip::Json result;
    gossip::TrianglePartitionedGraph tpg;
    gossip::BichromaticGraph k;
    if (a == 0) {
      const gossip::Graph h = gossip::graph_from_json(in);
      result["3col"] = gossip::graph_to_json(h);
      if (solve) result["3col_colorable"] = gossip::is_three_colorable(h);
      tpg = gossip::reduce_3col_to_3ctpg(h);
    } else if (a == 1) {
      tpg.graph = gossip::graph_from_json(in);
      for (const auto& tr : in.at("triples")) {
        tpg.triples.push_back({tr.at(0).get<int>(), tr.at(1).get<int>(), tr.at(2).get<int>()});
      }
    } else {
      const int n = in.at("n").get<int>();
      gossip::Json red{{"n", n}, {"edges", in.at("red")}};
      gossip::Json blue{{"n", n}, {"edges", in.at("blue")}};
      k = {gossip::graph_from_json(red), gossip::graph_from_json(blue)};
    }
    if (a <= 1) {
      result["3ctpg"] = gossip::tpg_to_json(tpg);
      if (solve) result["3ctpg_colorable"] = gossip::is_three_colorable(tpg.graph);
    }
    if (b >= 2) {
      if (a <= 1) k = gossip::reduce_3ctpg_to_scbg(tpg);
      result["scbg"] = gossip::bichromatic_to_json(k);
      if (solve) {
        if (k.size() <= options.oracle_bound) {
          const auto sc = gossip::stable_coloring_search(k, options);
          result["stable_coloring"] = sc ? gossip::partition_to_json(*sc) : gossip::Json(nullptr);
        } else {
          result["stable_coloring"] = "skipped: above the oracle bound";
        }
      }
    }
    if (b >= 3) {
      const gossip::Instance w = gossip::reduce_scbg_to_matching_instance(k);
      result["matching"] = gossip::instance_to_json(w);
      if (solve) {
        if (w.size() <= options.oracle_bound) {
          const auto net = gossip::exists_stable_network(w, 2, options);
          result["stable_network"] = net ? gossip::network_to_json(*net) : gossip::Json(nullptr);
        } else {
          result["stable_network"] = "skipped: above the oracle bound";
        }
      }
    }
    *out = dup(result.dump());
    return GN_OK;
  });
}

gn_status gn_trace(const gn_instance* inst, const gn_network* start, const char* schedule,
                   int max_steps, char** out) {
  return guarded([&] {
    require(inst && start && out, "null argument");
    require(max_steps >= 0, "max_steps must be non-negative");
    std::optional<std::vector<gossip::Defection>> moves;
    if (schedule) moves = schedule_from_json(gossip::parse_json(schedule));
    const auto tr = gossip::best_response_run(inst->value, start->value, moves, max_steps);
    std::string s;
    for (const auto& line : gossip::trajectory_lines(tr)) s += line + "\n";
    *out = dup(s);
    return GN_OK;
  });
}

int gn_suite_size(void) { return gossip::suite_size(); }

gn_status gn_suite_run(int id, const char* format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const std::string f = format ? format : "markdown";
    require(f == "markdown" || f == "json", "format must be markdown or json");
    require(id >= 0 && id <= gossip::suite_size(), "no such check");
    std::vector<gossip::CriterionResult> results;
    if (id == 0) {
      results = gossip::run_suite();
    } else {
      results.push_back(gossip::run_criterion(id));
    }
    *out = dup(f == "json" ? gossip::suite_json(results) : gossip::suite_markdown(results));
    for (const auto& r : results) {
      if (!r.passed) return GN_UNSTABLE;
    }
    return GN_OK;
  });
}

}  // extern "C"
