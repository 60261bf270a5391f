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

#include <doctest.h>

#include <map>

#include "construct.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "stability.hpp"
#include "welfare.hpp"

using namespace gossip;

namespace {

std::int64_t sum_squares(const Network& net) {
  std::int64_t s = 0;
  const CliquePartition parts = components(net);
  for (const auto& b : parts.blocks()) s += static_cast<std::int64_t>(b.size() * b.size());
  return s;
}

std::vector<Agent> bn_layer(int n, int lo, int hi) {
  std::vector<Agent> out;
  for (int i = lo + 1; i <= hi; ++i) {
    out.push_back(bn_x(n, i));
    out.push_back(bn_y(n, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("F3 table and closed form") {
  CHECK(f3(1) == 1);
  CHECK(f3(2) == 3);
  CHECK(f3(3) == 7);
  // The closed form vanishes at a single agent while the table starts at 1.
  CHECK(f3_closed(1) == 0);
  for (int n = 2; n <= 100; ++n) CHECK(f3_closed(n) == (n + 4) * (n - 1) / 2);
  for (int n = 3; n <= 100; ++n) CHECK(f3(n) - f3(n - 1) == n + 1);
}

TEST_CASE("F4 table and closed form") {
  CHECK(f4(1) == 1);
  CHECK(f4(2) == 3);
  CHECK(f4(3) == 7);
  CHECK(f4(4) == 17);
  CHECK(f4(5) == 34);
  for (int n = 6; n <= 100; ++n) CHECK(f4(n) == f4_closed(n));
}

TEST_CASE("sixth powers and the minimal additive chain") {
  const auto r = potential_counterexample_check();
  CHECK(r.sixth_power_before == 5 * 15625 + 1);
  CHECK(r.sixth_power_before == 78126);
  CHECK(r.sixth_power_after == 5 * 4096 + 46656);
  CHECK(r.sixth_power_after == 67136);
  CHECK(r.decreased);
  REQUIRE(r.minimal_potential.size() == 16);
  CHECK(r.minimal_potential[4] == 17);
  CHECK(r.minimal_potential[5] == 51);
  for (int i = 1; i <= 15; ++i) CHECK(r.minimal_potential[i] >= (std::int64_t{1} << (i - 1)));
  CHECK(r.chain_bounds_hold);
  CHECK(r.exponential_bound_holds);
}

TEST_CASE("potential values on networks") {
  const Instance inst = gen_friends_enemies(6, {});
  const Network net = network_from_partition(CliquePartition(6, {{0, 1, 2}, {3, 4}, {5}}));
  CHECK(potential(PotentialKind::kSumSquares, inst, net) == Utility(14));
  CHECK(potential(PotentialKind::kSumCubes, inst, net) == Utility(36));
  CHECK(potential(PotentialKind::kF3, inst, net) == Utility(7 + 3 + 1));
  CHECK(potential(PotentialKind::kGeneralUtility, inst, net) == Utility(8));
}

TEST_CASE("peeling examples") {
  CHECK(components(greedy_mis_peeling(gen_friends_enemies(5, {}))).block_count() == 1);
  const auto blocks = peel_blocks(gen_Bn(9));
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == bn_layer(9, 3, 9));
  CHECK(blocks[1] == bn_layer(9, 1, 3));
  CHECK(blocks[2] == bn_layer(9, 0, 1));
  // {a, b, c} is conflict free, so the pendants come off one by one.
  CHECK(peel_blocks(gen_k3_pendants()).size() == 4);
  CHECK_THROWS_AS(greedy_mis_peeling(gen_strong_weak_ties()), Error);
}

TEST_CASE("peeling blocks are maximum independent sets of what remains") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng.below(10));
    const Instance inst = gen_random(n, 0.4, rng.next());
    const ConflictGraph h = conflict_graph(inst);
    std::vector<bool> gone(n, false);
    for (const auto& block : peel_blocks(inst)) {
      std::vector<int> rest;
      for (int i = 0; i < n; ++i) {
        if (!gone[i]) rest.push_back(i);
      }
      std::vector<Edge> sub;
      for (const Edge& e : h.edges()) {
        const auto a = std::find(rest.begin(), rest.end(), e.a);
        const auto b = std::find(rest.begin(), rest.end(), e.b);
        if (a != rest.end() && b != rest.end()) {
          sub.emplace_back(static_cast<int>(a - rest.begin()), static_cast<int>(b - rest.begin()));
        }
      }
      CHECK(static_cast<int>(block.size()) ==
            oracle::max_independent_size(Graph(static_cast<int>(rest.size()), sub)));
      for (Agent a : block) gone[a] = true;
    }
  }
}

TEST_CASE("peeling output is k-stable for every k on small instances") {
  Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const Instance inst = gen_random(n, 0.35, rng.next());
    const Network net = greedy_mis_peeling(inst);
    for (int k = 1; k <= n; ++k) {
      CHECK_FALSE(oracle::literal_improving_defection(inst, net.edges(), k));
    }
  }
}

TEST_CASE("two-stable dynamics examples") {
  const Trajectory all = two_stable_dynamics(gen_friends_enemies(5, {}));
  CHECK(all.moves.size() == 4);
  CHECK(components(all.final_state()).block_count() == 1);
  std::vector<Edge> every;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) every.emplace_back(i, j);
  }
  const Trajectory none = two_stable_dynamics(gen_friends_enemies(4, every));
  CHECK(none.moves.empty());
  CHECK(components(none.final_state()).block_count() == 4);
}

TEST_CASE("two-stable dynamics raise the square sum by at least two") {
  Rng rng(33);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const Instance inst = gen_random(n, 0.4, rng.next());
    const Trajectory tr = two_stable_dynamics(inst);
    CHECK(2 * tr.moves.size() <= static_cast<std::size_t>(n * n));
    for (std::size_t s = 1; s < tr.states.size(); ++s) {
      CHECK(sum_squares(tr.states[s]) - sum_squares(tr.states[s - 1]) >= 2);
    }
    CHECK(is_k_stable(inst, tr.final_state(), 2).stable);
  }
}

TEST_CASE("potential dynamics reach k-stable networks with rising potentials") {
  Rng rng(34);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const Instance inst = gen_random(n, 0.35, rng.next());
    for (int k : {3, 4}) {
      const Trajectory tr = potential_dynamics(inst, k);
      for (std::size_t s = 1; s < tr.potentials.size(); ++s) {
        CHECK(tr.potentials[s] > tr.potentials[s - 1]);
      }
      CHECK(is_k_stable(inst, tr.final_state(), k).stable);
    }
  }
  CHECK_THROWS_AS(potential_dynamics(gen_friends_enemies(3, {}), 5), Error);
}

TEST_CASE("three-stable repair keeps the optimum") {
  Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const Instance inst = gen_random(n, 0.35, rng.next());
    const auto opt = optimal_total_welfare(inst);
    const Trajectory tr = three_stable_from_optimal(inst, opt.witness);
    CHECK(total_welfare(inst, tr.final_state()) == opt.value);
    CHECK(is_k_stable(inst, tr.final_state(), 3).stable);
  }
  // Pendant pairs maximize welfare but are not 3-stable; repair moves on.
  const Instance pend = gen_k3_pendants();
  const CliquePartition pairs(6, {{0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(is_k_stable(pend, network_from_partition(pairs), 3).stable);
  const Trajectory tr = three_stable_from_optimal(pend, pairs);
  CHECK(tr.moves.size() >= 1);
  CHECK(is_k_stable(pend, tr.final_state(), 3).stable);
}

TEST_CASE("best-response cycle gadget") {
  const CycleGadget g = gen_best_response_cycle(6);
  const Trajectory tr = best_response_run(g.instance, g.start, g.schedule, 100);
  CHECK(tr.moves.size() == 6);
  CHECK(tr.cycle);
  CHECK(tr.cycle_start == 0);
  CHECK(components(tr.final_state()) == components(g.start));
  // Reversing the schedule breaks the first move.
  auto bad = g.schedule;
  std::swap(bad[0], bad[1]);
  CHECK_THROWS_AS(best_response_run(g.instance, g.start, bad, 100), Error);
}

TEST_CASE("automatic best response on friends merges everyone") {
  const Trajectory tr = best_response_run(gen_friends_enemies(4, {}), Network(4), std::nullopt, 100);
  CHECK_FALSE(tr.cycle);
  CHECK(components(tr.final_state()) == CliquePartition(4, {{0, 1, 2, 3}}));
}

TEST_CASE("gale-shapley matchings have no blocking pair") {
  Rng rng(36);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Preferences p = random_preferences(n, rng);
    const auto wife = gale_shapley(p);
    std::vector<int> husband(n, -1);
    for (int m = 0; m < n; ++m) husband[wife[m]] = m;
    const auto rank = [](const std::vector<int>& list, int x) {
      return std::find(list.begin(), list.end(), x) - list.begin();
    };
    for (int m = 0; m < n; ++m) {
      for (int w = 0; w < n; ++w) {
        const bool m_prefers = rank(p.men[m], w) < rank(p.men[m], wife[m]);
        const bool w_prefers = rank(p.women[w], m) < rank(p.women[w], husband[w]);
        CHECK_FALSE((m_prefers && w_prefers));
      }
    }
  }
  Preferences bad{{{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(bad.validate(), Error);
}
