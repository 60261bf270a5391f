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

#include "experiment.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "coloring.hpp"
#include "construct.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "independent_set.hpp"
#include "partitions.hpp"
#include "reductions.hpp"
#include "serialization.hpp"
#include "stability.hpp"
#include "welfare.hpp"

namespace gossip {

std::vector<Instance> random_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
  std::vector<Instance> out;
  const int span = max_n - min_n + 1;
  for (int t = 0; t < count; ++t) {
    const int n = min_n + t % span;
    const double p = 0.05 + 0.1 * ((t / span + t) % 10);
    out.push_back(gen_random(n, p, seed + static_cast<std::uint64_t>(t)));
  }
  return out;
}

std::vector<Graph> graphs_up_to_isomorphism(int n) {
  std::vector<Edge> pairs;
  for (Agent a = 0; a < n; ++a) {
    for (Agent b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::pair<Agent, Agent>, int> pair_index;
  for (std::size_t x = 0; x < pairs.size(); ++x) pair_index[{pairs[x].a, pairs[x].b}] = static_cast<int>(x);
  const auto relabel = [&](std::uint32_t mask, const std::vector<int>& p) {
    std::uint32_t out = 0;
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      if ((mask >> x & 1U) == 0) continue;
      const Edge e(p[pairs[x].a], p[pairs[x].b]);
      out |= 1U << pair_index[{e.a, e.b}];
    }
    return out;
  };
  std::set<std::uint32_t> seen;
  std::vector<Graph> reps;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& p : perms) canon = std::min(canon, relabel(mask, p));
    if (!seen.insert(canon).second) continue;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      if (mask >> x & 1U) {
        ++degree[pairs[x].a];
        ++degree[pairs[x].b];
      }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return degree[x] > degree[y]; });
    std::vector<int> to(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) to[order[x]] = x;
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      if (mask >> x & 1U) edges.emplace_back(to[pairs[x].a], to[pairs[x].b]);
    }
    reps.emplace_back(n, std::move(edges));
  }
  return reps;
}

namespace {

// Collects sub-check outcomes into one detail line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    passed_ = passed_ && ok;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::string out;
    for (const auto& s : notes_) out += (out.empty() ? "" : "; ") + s;
    for (const auto& s : failures_) out += (out.empty() ? "FAILED: " : "; FAILED: ") + s;
    return out;
  }

 private:
  bool passed_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::string blocks_text(const CliquePartition& p, const Instance& inst) {
  std::string out;
  for (const auto& b : p.blocks()) {
    out += out.empty() ? "{" : " {";
    for (std::size_t x = 0; x < b.size(); ++x) {
      out += (x ? "," : "") + (inst.labels().empty() ? str(b[x]) : inst.labels()[b[x]]);
    }
    out += "}";
  }
  return out;
}

void existence(Checks& c) {
  const auto corpus = random_corpus(200, 2, 12, 1001);
  int checked = 0;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const Instance& inst = corpus[t];
    const DefectionSearch search(inst);
    const auto masks = partition_masks(components(greedy_mis_peeling(inst)));
    for (int k = 1; k <= inst.size(); ++k) {
      ++checked;
      if (auto w = search.first(masks, k)) {
        c.expect(false, "instance " + str(static_cast<std::int64_t>(t)) + " unstable at k=" + str(k));
        return;
      }
    }
  }
  c.note("200 instances, n 2..12: peeled networks pass all " + str(checked) + " (instance, k) checks");
}

void two_stable(Checks& c) {
  const auto corpus = random_corpus(200, 2, 12, 1001);
  std::int64_t moves = 0;
  std::int64_t min_delta = -1;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const Instance& inst = corpus[t];
    const std::int64_t n = inst.size();
    const Trajectory tr = two_stable_dynamics(inst);
    for (std::size_t s = 0; s + 1 < tr.potentials.size(); ++s) {
      const std::int64_t d = tr.potentials[s + 1].value() - tr.potentials[s].value();
      if (min_delta < 0 || d < min_delta) min_delta = d;
      c.expect(d >= 2, "instance " + str(static_cast<std::int64_t>(t)) + " step delta " + str(d));
    }
    c.expect(2 * static_cast<std::int64_t>(tr.moves.size()) <= n * n,
             "instance " + str(static_cast<std::int64_t>(t)) + " used " +
                 str(static_cast<std::int64_t>(tr.moves.size())) + " moves");
    c.expect(is_k_stable(inst, tr.final_state(), 2).stable,
             "instance " + str(static_cast<std::int64_t>(t)) + " final state not 2-stable");
    moves += static_cast<std::int64_t>(tr.moves.size());
    if (!c.passed()) return;
  }
  c.note("200 instances, " + str(moves) + " moves, smallest sum-of-squares rise " + str(min_delta) +
         ", all final states 2-stable");
}

void cycle(Checks& c) {
  const CycleGadget g = gen_best_response_cycle(6);
  const Trajectory tr = best_response_run(g.instance, g.start, g.schedule, 6);
  c.expect(tr.moves.size() == 6, "expected 6 moves");
  c.expect(tr.final_state() == g.start, "final network differs from the start");
  bool early = false;
  for (std::size_t s = 1; s + 1 < tr.states.size(); ++s) early = early || tr.states[s] == g.start;
  c.expect(!early, "start network reappeared before move 6");
  c.expect(tr.cycle && tr.cycle_start == 0, "cycle flag not raised at the start state");
  const Agent e = 6 + 4;
  const Agent cc = 6 + 2;
  c.note("6 validated improving moves return to the start; e " +
         node_utility(g.instance, tr.states[0], e).to_string() + "->" +
         node_utility(g.instance, tr.states[1], e).to_string() + ", c " +
         node_utility(g.instance, tr.states[0], cc).to_string() + "->" +
         node_utility(g.instance, tr.states[1], cc).to_string() + " on move 1");
}

void potentials(Checks& c) {
  c.expect(f3(1) == 1 && f3(2) == 3 && f3(3) == 7, "F3 base values");
  c.expect(f4(1) == 1 && f4(2) == 3 && f4(3) == 7 && f4(4) == 17, "F4 base values");
  for (int n = 2; n <= 100; ++n) c.expect(f3_closed(n) == f3(n), "F3 closed form at " + str(n));
  for (int n = 3; n <= 100; ++n) {
    c.expect(f3_closed(n) == 2 * f3_closed(n - 1) - f3_closed(n - 2) + 1,
             "F3 closed form recurrence step at " + str(n));
  }
  for (int n = 6; n <= 100; ++n) c.expect(f4_closed(n) == f4(n), "F4 closed form at " + str(n));
  const PotentialCounterexample pc = potential_counterexample_check();
  c.expect(pc.sixth_power_before == 78126 && pc.sixth_power_after == 67136 && pc.decreased,
           "sixth-power counterexample");
  c.expect(pc.chain_bounds_hold && pc.exponential_bound_holds, "minimal potential chain bounds");
  const auto& f = pc.minimal_potential;
  c.note("F3 1,3,7; F4 1,3,7,17, F4(5)=" + str(f4(5)) + "; closed forms agree (F3 for 2..100, " +
         "F3 closed form at n=1 is " + str(f3_closed(1)) + "; F4 for 6..100)");
  c.note("sum x^6 " + str(pc.sixth_power_before) + " -> " + str(pc.sixth_power_after));
  c.note("minimal chain F(2..5) = " + str(f[2]) + "," + str(f[3]) + "," + str(f[4]) + "," + str(f[5]) +
         ", F(15) = " + str(f[15]));
}

void optimal_is_stable(Checks& c) {
  const auto corpus = random_corpus(100, 2, 9, 2002);
  std::int64_t partitions = 0;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const Instance& inst = corpus[t];
    const DefectionSearch search(inst);
    for (const CliquePartition& p : optimal_partitions(inst)) {
      ++partitions;
      c.expect(search.stable(partition_masks(p), 2),
               "instance " + str(static_cast<std::int64_t>(t)) + " optimum " + blocks_text(p, inst));
    }
    if (!c.passed()) return;
  }
  c.note("100 instances, n 2..9: all " + str(partitions) + " welfare-optimal partitions are 2-stable");
}

void price_of_stability(Checks& c) {
  const auto corpus = random_corpus(100, 2, 9, 3003);
  std::int64_t repairs = 0;
  std::int64_t starts = 0;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const Instance& inst = corpus[t];
    const std::string tag = "instance " + str(static_cast<std::int64_t>(t));
    const OptimumResult opt = optimal_total_welfare(inst);
    for (const CliquePartition& start : optimal_partitions(inst)) {
      const Trajectory tr = three_stable_from_optimal(inst, start);
      ++starts;
      repairs += static_cast<std::int64_t>(tr.moves.size());
      c.expect(total_welfare(inst, tr.final_state()) == opt.value,
               tag + " repaired welfare differs");
      c.expect(is_k_stable(inst, tr.final_state(), 3).stable, tag + " repair not 3-stable");
    }
    const int chi = chromatic_number(conflict_graph(inst), 40).colors;
    int fewest = inst.size() + 1;
    for (const auto& p : enumerate_stable_networks(inst, 2)) {
      fewest = std::min(fewest, static_cast<int>(p.block_count()));
    }
    c.expect(fewest == chi, tag + " fewest 2-stable components " + str(fewest) + " vs chi " + str(chi));
    if (!c.passed()) return;
  }
  c.note("100 instances, n 2..9: 3-stable repair from each of " + str(starts) +
         " optimal partitions keeps the optimum (" + str(repairs) +
         " repair moves); a 2-stable network with chi(H) components exists in each");
  const Instance k3 = gen_k3_pendants();
  const CliquePartition pairs(6, {{0, 3}, {1, 4}, {2, 5}});
  const Trajectory tr = three_stable_from_optimal(k3, pairs);
  c.expect(total_welfare(k3, tr.final_state()) == Welfare{6} &&
               is_k_stable(k3, tr.final_state(), 3).stable,
           "k3-pendants repair from the pendant pairs");
  c.note("k3-pendants: repair from the pendant pairs reaches " +
         blocks_text(components(tr.final_state()), k3) + " in " +
         str(static_cast<std::int64_t>(tr.moves.size())) + " move(s), welfare " +
         total_welfare(k3, tr.final_state()).to_string());
}

void figures(Checks& c) {
  {
    const Instance inst = gen_fig_distinct_stable();
    const CliquePartition ten(12, {{0, 1, 2, 3}, {4, 8}, {5, 9}, {6, 10}, {7, 11}});
    const auto stable = enumerate_stable_networks(inst, 2);
    const bool listed = std::find(stable.begin(), stable.end(), ten) != stable.end();
    const Welfare w = total_welfare(inst, ten);
    const OptimumResult opt = optimal_total_welfare(inst);
    const int fewest = min_conflict_free_blocks(inst);
    c.expect(listed && w == Welfare{20} && ten.block_count() == 5,
             "distinct-stable: K4 plus pairs not a 2-stable welfare-10 network");
    c.expect(opt.value == Welfare{24}, "distinct-stable optimum " + opt.value.to_string());
    c.expect(fewest == 4, "distinct-stable fewest components " + str(fewest));
    c.note("distinct-stable: 2-stable welfare " + w.to_string() + " with " +
           str(static_cast<std::int64_t>(ten.block_count())) + " components, optimum " +
           opt.value.to_string() + ", fewest components " + str(fewest));
  }
  {
    const Instance inst = gen_fig_k4_triangles();
    const WelfareReport r = welfare_report(inst, 4, Metric::kTotalUtility);
    c.expect(r.pos && !r.pos->unbounded && r.pos->value == Rational(6, 5),
             "k4-triangles PoS " + (r.pos ? r.pos->to_string() : std::string("none")));
    c.note("k4-triangles: k=4 PoS " + (r.pos ? r.pos->to_string() : std::string("none")) + " (" +
           str(static_cast<std::int64_t>(r.stable_count)) + " stable network, " +
           blocks_text(r.best_stable ? r.best_stable->witness : CliquePartition(), inst) + ")");
  }
  {
    const Instance inst = gen_fig_pendant_k4();
    const int fewest = min_conflict_free_blocks(inst);
    const auto optima = optimal_partitions(inst);
    const CliquePartition expected(8, {{0, 1, 2, 3}, {4}, {5}, {6}, {7}});
    c.expect(fewest == 4, "pendant-k4 fewest components " + str(fewest));
    c.expect(optima.size() == 1 && optima[0] == expected,
             "pendant-k4 welfare maximizers differ from K4 plus singletons");
    c.note("pendant-k4: fewest components " + str(fewest) + ", unique welfare maximizer " +
           blocks_text(optima.empty() ? CliquePartition() : optima[0], inst));
  }
  {
    const Instance inst = gen_k3_pendants();
    const int chi = chromatic_number(conflict_graph(inst), 40).colors;
    const auto stable = enumerate_stable_networks(inst, 3);
    int fewest = inst.size() + 1;
    for (const auto& p : stable) fewest = std::min(fewest, static_cast<int>(p.block_count()));
    c.expect(chi == 3, "k3-pendants chi " + str(chi));
    c.expect(!stable.empty() && fewest >= 4, "k3-pendants 3-stable network with fewer than 4 components");
    c.note("k3-pendants: chi " + str(chi) + ", " + str(static_cast<std::int64_t>(stable.size())) +
           " 3-stable networks, fewest components " + str(fewest));
  }
}

// S_k by the closed form, with n a power of 3.
std::vector<std::vector<Agent>> bn_layers(int n) {
  std::vector<std::vector<Agent>> out;
  for (std::int64_t lo = n / 3, hi = n; hi >= 1; hi = lo, lo /= 3) {
    std::vector<Agent> layer;
    for (std::int64_t i = lo + 1; i <= hi; ++i) {
      layer.push_back(bn_x(n, static_cast<int>(i)));
      layer.push_back(bn_y(n, static_cast<int>(i)));
    }
    std::sort(layer.begin(), layer.end());
    out.push_back(std::move(layer));
    if (lo == 0) break;
  }
  return out;
}

void fragmentation(Checks& c) {
  for (int n : {9, 27, 81}) {
    const auto blocks = peel_blocks(gen_Bn(n));
    const auto expected = bn_layers(n);
    c.expect(blocks == expected, "Bn(" + str(n) + ") peeling differs from the closed-form layers");
    c.note("Bn(" + str(n) + "): " + str(static_cast<std::int64_t>(blocks.size())) +
           " peeling blocks match S_k");
  }
  // Reduced size: every 3-stable network of B_3 against S_1.
  {
    const Instance b3 = gen_Bn(3);
    const auto s1 = bn_layers(3)[0];
    const auto stable = enumerate_stable_networks(b3, 3);
    std::int64_t with_s1 = 0;
    for (const auto& p : stable) {
      with_s1 += std::find(p.blocks().begin(), p.blocks().end(), s1) != p.blocks().end();
    }
    c.expect(!stable.empty() && with_s1 == static_cast<std::int64_t>(stable.size()),
             "B_3: " + str(static_cast<std::int64_t>(stable.size()) - with_s1) + " of " +
                 str(static_cast<std::int64_t>(stable.size())) + " 3-stable networks lack S_1");
    c.note("B_3: " + str(with_s1) + " of " + str(static_cast<std::int64_t>(stable.size())) +
           " 3-stable networks contain S_1");
  }
  // n = 9: a second maximum independent set R, completed by peeling the
  // remaining agents, is tested for 9-stability.
  {
    const int n = 9;
    const Instance b9 = gen_Bn(n);
    const ConflictGraph h = conflict_graph(b9);
    const auto s1 = bn_layers(n)[0];
    std::vector<Agent> r;
    for (int i = 3; i <= 9; ++i) r.push_back(bn_x(n, i));
    for (int i = 4; i <= 8; ++i) r.push_back(bn_y(n, i));
    std::sort(r.begin(), r.end());
    const bool second_mis = is_independent(h, r) && r.size() == s1.size() && r != s1;
    std::vector<std::vector<Agent>> blocks{r};
    std::vector<Agent> rest;
    for (Agent a = 0; a < 2 * n; ++a) {
      if (!std::binary_search(r.begin(), r.end(), a)) rest.push_back(a);
    }
    while (!rest.empty()) {
      auto next = max_independent_set(h, rest, 48);
      std::vector<Agent> left;
      std::set_difference(rest.begin(), rest.end(), next.begin(), next.end(), std::back_inserter(left));
      blocks.push_back(std::move(next));
      rest = std::move(left);
    }
    const CliquePartition alt(2 * n, blocks);
    const bool stable = is_k_stable(b9, network_from_partition(alt), n).stable;
    const bool contains = std::find(alt.blocks().begin(), alt.blocks().end(), s1) != alt.blocks().end();
    if (second_mis) c.note("Bn(9) maximum independent set is not unique");
    c.expect(!(stable && !contains),
             "Bn(9): 9-stable network without S_1: " + blocks_text(alt, b9));
  }
}

void nonexistence(Checks& c) {
  const std::vector<std::pair<std::string, Instance>> cases{
      {"asym-nonexist", gen_asymmetric_nonexistence()},
      {"c-nonexist(5)", gen_c_nonexistence(5)},
      {"strong-weak", gen_strong_weak_ties()}};
  for (const auto& [name, inst] : cases) {
    std::vector<ExaminedCandidate> log;
    const auto found = exists_stable_network(inst, 2, {}, &log);
    c.expect(!found, name + " has a 2-stable network");
    c.note(name + ": none of " + str(static_cast<std::int64_t>(log.size())) + " candidates 2-stable");
  }
}

void reduction_chain(Checks& c) {
  OracleOptions options;
  options.oracle_bound = 15;
  std::int64_t graphs = 0;
  std::int64_t colorable = 0;
  std::int64_t literal_mismatch = 0;
  std::int64_t all_pairs_mismatch = 0;
  std::string example;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& h : graphs_up_to_isomorphism(n)) {
      ++graphs;
      const bool col = is_three_colorable(h);
      const TrianglePartitionedGraph tpg = reduce_3col_to_3ctpg(h);
      const BichromaticGraph k = reduce_3ctpg_to_scbg(tpg);
      colorable += col;
      c.expect(is_three_colorable(tpg.graph) == col,
               "graph " + graph_to_json(h).dump() + ": triangle-partitioned graph disagrees");
      const auto sc = stable_coloring_search(k, options);
      if (sc) c.expect(verify_stable_coloring(k, *sc), "stable coloring fails verification");
      if (sc.has_value() != col) {
        if (literal_mismatch++ == 0) {
          example = graph_to_json(h).dump() + " has stable coloring " +
                    partition_to_json(*sc).dump();
        }
      }
      const auto strict = stable_coloring_search(k, options, ColoringRule::kAllPairs);
      all_pairs_mismatch += strict.has_value() != col;
    }
  }
  c.note(str(graphs) + " graphs on <= 5 nodes (" + str(colorable) +
         " 3-colorable); the triangle-partitioned graph is 3-colorable exactly when H is");
  c.expect(literal_mismatch == 0,
           str(literal_mismatch) + " non-3-colorable graphs still have a stable coloring, e.g. " +
               example);
  c.note("with the three-of-four rule applied to every split pair instead of only edges, " +
         str(graphs - all_pairs_mismatch) + " of " + str(graphs) + " graphs agree");
  OracleOptions wide;
  wide.oracle_bound = 24;
  const std::vector<std::pair<std::string, Graph>> seeds{
      {"K3", Graph(3, {{0, 1}, {0, 2}, {1, 2}})},
      {"K4", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})}};
  for (const auto& [name, h] : seeds) {
    const BichromaticGraph k = reduce_3ctpg_to_scbg(reduce_3col_to_3ctpg(h));
    const Instance w = reduce_scbg_to_matching_instance(k);
    const auto net = exists_stable_network(w, 2, wide);
    const bool col = is_three_colorable(h);
    c.expect(net.has_value() == col, name + ": matching instance disagrees with 3-colorability");
    if (net) {
      const auto decoded = decode_matching_partition(components(*net));
      c.expect(decoded && verify_stable_coloring(k, *decoded),
               name + ": stable network does not decode to a stable coloring");
    }
    c.note(name + " (" + str(w.size()) + " agents): " +
           (net ? "2-stable network found" : "no 2-stable network") + ", H " +
           (col ? "3-colorable" : "not 3-colorable"));
  }
}

bool blocking_pair(const Preferences& p, const std::vector<int>& wife) {
  const int n = p.size();
  std::vector<int> husband(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) husband[wife[m]] = m;
  const auto rank = [](const std::vector<int>& list, int x) {
    return static_cast<int>(std::find(list.begin(), list.end(), x) - list.begin());
  };
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      if (rank(p.men[m], w) < rank(p.men[m], wife[m]) &&
          rank(p.women[w], m) < rank(p.women[w], husband[w])) {
        return true;
      }
    }
  }
  return false;
}

void stable_marriage(Checks& c) {
  Rng rng(4004);
  std::int64_t matchings = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 4;
    const Preferences prefs = random_preferences(n, rng);
    const Instance inst = gen_stable_marriage(prefs);
    std::set<std::vector<int>> decoded;
    bool all_decode = true;
    for (const auto& p : enumerate_stable_networks(inst, 2)) {
      std::vector<int> wife(static_cast<std::size_t>(n), -1);
      for (const auto& b : p.blocks()) {
        if (b.size() == 2 && b[0] < n && b[1] >= n) {
          wife[b[0]] = b[1] - n;
        } else {
          all_decode = false;
        }
      }
      decoded.insert(wife);
    }
    std::set<std::vector<int>> brute;
    std::vector<int> wife(static_cast<std::size_t>(n));
    std::iota(wife.begin(), wife.end(), 0);
    do {
      if (!blocking_pair(prefs, wife)) brute.insert(wife);
    } while (std::next_permutation(wife.begin(), wife.end()));
    const std::string tag = "profile " + str(t);
    c.expect(all_decode, tag + ": a 2-stable network is not a perfect matching");
    c.expect(decoded == brute, tag + ": 2-stable networks differ from stable matchings");
    c.expect(brute.count(gale_shapley(prefs)) == 1, tag + ": Gale-Shapley output not stable");
    matchings += static_cast<std::int64_t>(brute.size());
    if (!c.passed()) return;
  }
  c.note("50 profiles, n 1..4: 2-stable networks decode to exactly the " + str(matchings) +
         " stable matchings; Gale-Shapley output among them");
}

void stability_gadget(Checks& c) {
  Rng rng(5005);
  std::int64_t unstable = 0;
  std::int64_t cases = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 6;
    const Graph l = random_graph(n, 0.2 + 0.1 * (t % 6), rng);
    for (int k : {3, 4}) {
      const StabilityGadget g = gen_stability_test_gadget(l, k);
      const bool gadget_unstable = !is_k_stable(g.instance, g.candidate, k).stable;
      bool has_is = false;
      for (std::uint32_t m = 0; m < (1U << n) && !has_is; ++m) {
        if (std::popcount(m) != k) continue;
        std::vector<Agent> members;
        for (Agent a = 0; a < n; ++a) {
          if (m >> a & 1U) members.push_back(a);
        }
        has_is = is_independent(l, members);
      }
      ++cases;
      unstable += gadget_unstable;
      c.expect(gadget_unstable == has_is, "graph " + graph_to_json(l).dump() + " k=" + str(k));
    }
  }
  c.note(str(cases) + " (graph, k) cases, " + str(unstable) +
         " unstable: instability matches a size-k independent set in every case");
}

struct Entry {
  std::string title;
  std::function<void(Checks&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"k-stable existence via independent-set peeling", existence},
      {"2-stable dynamics", two_stable},
      {"best-response cycle", cycle},
      {"potential tables", potentials},
      {"welfare-optimal networks are 2-stable", optimal_is_stable},
      {"price of stability 1 (k=3 welfare, k=2 components)", price_of_stability},
      {"figure gadget numbers", figures},
      {"Bn fragmentation", fragmentation},
      {"stable network nonexistence", nonexistence},
      {"reduction chain", reduction_chain},
      {"stable marriage correspondence", stable_marriage},
      {"stability-testing gadget", stability_gadget},
  };
  return list;
}

}  // namespace

int suite_size() { return static_cast<int>(entries().size()); }

const std::string& criterion_title(int id) {
  if (id < 1 || id > suite_size()) throw Error(ErrorCode::kInvalid, "no criterion " + str(id));
  return entries()[id - 1].title;
}

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  try {
    entries()[id - 1].run(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = c.passed();
  r.detail = c.detail();
  return r;
}

std::vector<CriterionResult> run_suite() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= suite_size(); ++id) out.push_back(run_criterion(id));
  return out;
}

std::string suite_markdown(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  int passed = 0;
  os << "| # | check | result | detail |\n|---|---|---|---|\n";
  for (const auto& r : results) {
    passed += r.passed;
    os << "| " << r.id << " | " << r.title << " | " << (r.passed ? "pass" : "FAIL") << " | "
       << r.detail << " |\n";
  }
  os << "\n" << passed << " of " << results.size() << " checks pass.\n";
  return os.str();
}

std::string suite_json(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

}  // namespace gossip
