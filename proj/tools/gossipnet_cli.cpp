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

// gossipnet command-line tool. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gossipnet/gossipnet.h"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  int code;
};

int exit_code(gn_status s) {
  switch (s) {
    case GN_OK: return 0;
    case GN_UNSTABLE: return 1;
    case GN_ERR_ORACLE_BOUND: return 3;
    case GN_NONEXISTENT: return 4;
    default: return 2;
  }
}

// Throws for statuses other than the ones listed as acceptable.
gn_status check(gn_status s, std::initializer_list<gn_status> ok = {}) {
  if (s == GN_OK) return s;
  for (gn_status o : ok) {
    if (s == o) return s;
  }
  std::cerr << "gossipnet: " << gn_status_name(s) << ": " << gn_last_error() << "\n";
  throw Failure{exit_code(s)};
}

struct StrFree {
  void operator()(char* s) const { gn_string_free(s); }
};
struct InstFree {
  void operator()(gn_instance* p) const { gn_instance_free(p); }
};
struct NetFree {
  void operator()(gn_network* p) const { gn_network_free(p); }
};
struct OptFree {
  void operator()(gn_options* p) const { gn_options_free(p); }
};
using Str = std::unique_ptr<char, StrFree>;
using Inst = std::unique_ptr<gn_instance, InstFree>;
using Net = std::unique_ptr<gn_network, NetFree>;
using Opts = std::unique_ptr<gn_options, OptFree>;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "gossipnet: cannot read " << path << "\n";
    throw Failure{2};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  std::string out = text;
  if (out.empty() || out.back() != '\n') out += '\n';
  if (path.empty() || path == "-") {
    std::cout << out;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "gossipnet: cannot write " << path << "\n";
    throw Failure{2};
  }
  f << out;
}

struct Loaded {
  Inst inst;
  Net net;
  Str schedule;
};

Loaded load(const std::string& path) {
  const std::string text = slurp(path);
  gn_instance* i = nullptr;
  gn_network* n = nullptr;
  char* s = nullptr;
  check(gn_bundle_split(text.c_str(), &i, &n, &s));
  return {Inst(i), Net(n), Str(s)};
}

Net load_network_text(const std::string& text) {
  gn_network* n = nullptr;
  check(gn_network_parse(text.c_str(), &n));
  return Net(n);
}

Net load_network(const std::string& path) { return load_network_text(slurp(path)); }

std::string pretty(const char* json) { return Json::parse(json).dump(2); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-sharing network formation games"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", gn_version());

  int oracle_bound = 0;
  std::uint64_t seed = 0;
  bool have_seed = false;
  app.add_option("--oracle-bound", oracle_bound, "Agent ceiling for exhaustive search")
      ->check(CLI::PositiveNumber);
  app.add_option_function<std::uint64_t>(
      "--seed", [&](const std::uint64_t& v) { seed = v; have_seed = true; },
      "Seed for random families");

  // generate
  auto* gen = app.add_subcommand("generate", "Build an instance family");
  std::string family;
  std::string out_path;
  Json params = Json::object();
  gen->add_option("family", family, "Family name (see --list)");
  bool list = false;
  gen->add_flag("--list", list, "List family names");
  bool with_network = false;
  gen->add_flag("--with-network", with_network, "Include the family's network and schedule");
  const auto int_param = [&](const char* flag, const char* key, const char* help) {
    gen->add_option_function<long long>(
        flag, [&params, key](const long long& v) { params[key] = v; }, help);
  };
  int_param("--n", "n", "Size parameter");
  int_param("--rows", "rows", "Grid rows");
  int_param("--cols", "cols", "Grid columns");
  int_param("--k", "k", "Defection size (stability gadget)");
  int_param("--s", "s", "Clique size (cycle gadget)");
  int_param("--c", "c", "Weight c (c-nonexist)");
  gen->add_option_function<double>(
      "--p", [&](const double& v) { params["p"] = v; }, "Edge probability (random)");
  std::string graph_path;
  std::string prefs_path;
  gen->add_option("--graph", graph_path, "Graph JSON for gadget families");
  gen->add_option("--prefs", prefs_path, "Preference JSON for stable-marriage");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Construct a stable network");
  std::string in_path;
  std::string alg = "peel";
  std::string net_out;
  solve->add_option("input", in_path, "Instance or bundle (default stdin)");
  solve->add_option("--alg", alg, "peel, dyn2, pot3, pot4 or repair3")
      ->check(CLI::IsMember({"peel", "dyn2", "pot3", "pot4", "repair3"}));
  solve->add_option("--out", net_out, "Write the bare network JSON here");

  // verify
  auto* verify = app.add_subcommand("verify", "Check k-stability of a network");
  int k = 2;
  std::string network_path;
  verify->add_option("input", in_path, "Bundle with a network (default stdin)");
  verify->add_option("--k", k, "Defection size")->required()->check(CLI::PositiveNumber);
  verify->add_option("--network", network_path, "Network JSON (overrides the bundle)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List all k-stable partitions");
  enumerate->add_option("input", in_path, "Instance or bundle (default stdin)");
  enumerate->add_option("--k", k, "Defection size")->required()->check(CLI::PositiveNumber);

  // welfare
  auto* welfare = app.add_subcommand("welfare", "Price of stability and anarchy");
  std::string metric = "utility";
  welfare->add_option("input", in_path, "Instance or bundle (default stdin)");
  welfare->add_option("--k", k, "Defection size")->required()->check(CLI::PositiveNumber);
  welfare->add_option("--metric", metric, "utility or components")
      ->check(CLI::IsMember({"utility", "components"}));

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Run the hardness reduction chain");
  std::string from = "3col";
  std::string to = "matching";
  bool solve_stages = false;
  reduce->add_option("input", in_path, "Source JSON (default stdin)");
  reduce->add_option("--from", from, "3col, 3ctpg or scbg")
      ->check(CLI::IsMember({"3col", "3ctpg", "scbg"}));
  reduce->add_option("--to", to, "3ctpg, scbg or matching")
      ->check(CLI::IsMember({"3ctpg", "scbg", "matching"}));
  reduce->add_flag("--solve", solve_stages, "Decide each stage by exhaustive search");

  // trace
  auto* trace = app.add_subcommand("trace", "Replay best-response dynamics");
  int max_steps = 100;
  bool automatic = false;
  trace->add_option("input", in_path, "Bundle (default stdin)");
  trace->add_option("--max-steps", max_steps, "Step limit")->check(CLI::NonNegativeNumber);
  trace->add_flag("--auto", automatic, "Ignore any schedule and pick best responses");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run the reference battery");
  std::string suite;
  std::string format = "markdown";
  int only = 0;
  experiment->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"paper-suite"}));
  experiment->add_option("--format", format, "markdown or json")
      ->check(CLI::IsMember({"markdown", "json"}));
  experiment->add_option("--only", only, "Run a single check by number");
  experiment->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Opts opts(gn_options_new());
    if (oracle_bound > 0) gn_options_set_oracle_bound(opts.get(), oracle_bound);

    if (*gen) {
      if (list) {
        char* s = nullptr;
        check(gn_families(&s));
        Str hold(s);
        std::cout << s;
        return 0;
      }
      if (family.empty()) {
        std::cerr << "gossipnet: generate needs a family name\n";
        return 2;
      }
      if (have_seed) params["seed"] = seed;
      if (!graph_path.empty()) params["graph"] = Json::parse(slurp(graph_path));
      if (!prefs_path.empty()) params["prefs"] = Json::parse(slurp(prefs_path));
      char* s = nullptr;
      check(gn_generate(family.c_str(), params.dump().c_str(), &s));
      Str hold(s);
      if (!with_network) {
        gn_instance* i = nullptr;
        check(gn_bundle_split(s, &i, nullptr, nullptr));
        Inst inst(i);
        char* bare = nullptr;
        check(gn_instance_serialize(inst.get(), &bare));
        Str hold_bare(bare);
        emit(pretty(bare), out_path);
        return 0;
      }
      emit(pretty(s), out_path);
      return 0;
    }

    if (*solve) {
      Loaded in = load(in_path);
      gn_network* n = nullptr;
      check(gn_solve(in.inst.get(), alg.c_str(), opts.get(), &n));
      Net net(n);
      if (!net_out.empty()) {
        char* s = nullptr;
        check(gn_network_serialize(net.get(), &s));
        Str hold(s);
        emit(pretty(s), net_out);
      }
      char* s = nullptr;
      check(gn_bundle_join(in.inst.get(), net.get(), nullptr, &s));
      Str hold(s);
      emit(pretty(s), "");
      return 0;
    }

    if (*verify) {
      Loaded in = load(in_path);
      Net net = network_path.empty() ? std::move(in.net) : load_network(network_path);
      if (!net) {
        std::cerr << "gossipnet: verify needs a network (bundle or --network)\n";
        return 2;
      }
      char* w = nullptr;
      const gn_status st = check(gn_verify(in.inst.get(), net.get(), k, &w), {GN_UNSTABLE});
      Str hold(w);
      if (st == GN_OK) {
        std::cout << "STABLE\n";
        return 0;
      }
      std::cout << "UNSTABLE\n" << pretty(w) << "\n";
      return 1;
    }

    if (*enumerate) {
      Loaded in = load(in_path);
      char* s = nullptr;
      const gn_status st =
          check(gn_enumerate(in.inst.get(), k, opts.get(), &s), {GN_NONEXISTENT});
      Str hold(s);
      std::cout << s << "\n";
      return exit_code(st);
    }

    if (*welfare) {
      Loaded in = load(in_path);
      char* s = nullptr;
      const gn_status st = check(
          gn_welfare(in.inst.get(), k, metric.c_str(), opts.get(), &s), {GN_NONEXISTENT});
      Str hold(s);
      std::cout << pretty(s) << "\n";
      return exit_code(st);
    }

    if (*reduce) {
      const std::string text = slurp(in_path);
      char* s = nullptr;
      check(gn_reduce(text.c_str(), from.c_str(), to.c_str(), solve_stages ? 1 : 0, opts.get(),
                      &s));
      Str hold(s);
      std::cout << pretty(s) << "\n";
      return 0;
    }

    if (*trace) {
      Loaded in = load(in_path);
      Net start = std::move(in.net);
      if (!start) {
        const Json empty{{"n", gn_instance_size(in.inst.get())}, {"edges", Json::array()}};
        start = load_network_text(empty.dump());
      }
      char* s = nullptr;
      check(gn_trace(in.inst.get(), start.get(), automatic ? nullptr : in.schedule.get(),
                     max_steps, &s));
      Str hold(s);
      std::cout << s;
      return 0;
    }

    if (*experiment) {
      char* s = nullptr;
      const gn_status st = check(gn_suite_run(only, format.c_str(), &s), {GN_UNSTABLE});
      Str hold(s);
      emit(s, out_path);
      return exit_code(st);
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "gossipnet: parse: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
