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

#include "construct.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "independent_set.hpp"
#include "oracles.hpp"
#include "serialization.hpp"
#include "stability.hpp"
#include "welfare.hpp"

using namespace gossip;

TEST_CASE("friends and enemies") {
  const Instance f = gen_friends_enemies(4, {});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(f.u(i, j) == Utility(i == j ? 0 : 1));
  }
  const Instance e = gen_friends_enemies(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(conflict_graph(e).edges().size() == 3);
}

TEST_CASE("Bn structure") {
  const Instance b = gen_Bn(9);
  CHECK(b.size() == 18);
  CHECK(b.labels()[bn_x(9, 9)] == "x9");
  CHECK(b.labels()[bn_y(9, 1)] == "y1");
  // Enemy pairs are (x_i, y_j) and (x_j, y_i) exactly when 3j <= i.
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      const bool enemy = 3 * j <= i || 3 * i <= j;
      CHECK(b.u(bn_x(9, i), bn_y(9, j)).is_neg_inf() == enemy);
      CHECK_FALSE(b.u(bn_x(9, i), bn_x(9, j)).is_neg_inf());
      CHECK_FALSE(b.u(bn_y(9, i), bn_y(9, j)).is_neg_inf());
    }
  }
  CHECK(max_independent_set(conflict_graph(b), 48).size() == 12);
  CHECK_THROWS_AS(gen_Bn(2), Error);
}

TEST_CASE("cycle gadget first moves") {
  const CycleGadget g = gen_best_response_cycle(6);
  const int m = 6;
  const Agent c = m + 2;
  const Agent d = m + 3;
  const Agent e = m + 4;
  CHECK(node_utility(g.instance, g.start, c) == Utility(1));
  const Network after1 = apply_defection(g.start, g.schedule[0]);
  CHECK(node_utility(g.instance, after1, e) == node_utility(g.instance, g.start, e) + Utility(1));
  CHECK(node_utility(g.instance, after1, c) == Utility(m + 2));
  CHECK(node_utility(g.instance, after1, d).is_neg_inf());
  const Network after2 = apply_defection(after1, g.schedule[1]);
  CHECK(node_utility(g.instance, after2, d) == Utility(0));
  CHECK_THROWS_AS(gen_best_response_cycle(1), Error);
}

TEST_CASE("stable marriage encoding") {
  Rng rng(51);
  const Preferences p = random_preferences(3, rng);
  const Instance inst = gen_stable_marriage(p);
  CHECK(inst.size() == 6);
  CHECK(inst.u(0, 1).is_neg_inf());
  CHECK(inst.u(3, 4).is_neg_inf());
  for (int m = 0; m < 3; ++m) {
    for (int r = 0; r < 3; ++r) CHECK(inst.u(m, 3 + p.men[m][r]) == Utility(3 - r));
  }
  const Instance one = gen_stable_marriage({{{0}}, {{0}}});
  const auto net = exists_stable_network(one, 2);
  REQUIRE(net.has_value());
  CHECK(components(*net) == CliquePartition(2, {{0, 1}}));
  const std::vector<int> wife = gale_shapley(p);
  std::vector<std::vector<Agent>> pairs;
  for (int man = 0; man < 3; ++man) pairs.push_back({man, 3 + wife[man]});
  CHECK(is_k_stable(inst, network_from_partition(CliquePartition(6, pairs)), 2).stable);
}

TEST_CASE("nonexistence gadgets") {
  const Instance sw = gen_strong_weak_ties();
  CHECK(sw.u(0, 1) == Utility(5));
  CHECK(sw.u(2, 3) == Utility(5));
  CHECK(sw.u(1, 3).is_neg_inf());
  CHECK(sw.u(0, 2) == Utility(1));

  const Instance c = gen_c_nonexistence(7);
  CHECK(c.u(0, 2) == Utility(7));
  CHECK(c.u(1, 3) == Utility(7));
  CHECK(c.u(2, 3).is_neg_inf());
  CHECK(c.u(0, 1) == Utility(1));
  CHECK(parse_instance(serialize_instance(c)) == c);

  const Instance a = gen_asymmetric_nonexistence();
  CHECK(a.u(1, 2).is_neg_inf());
  CHECK(a.u(2, 1) == Utility(1));
  // x with v1: x and v2 gain by forming their own pair.
  const Network xv1(4, {{0, 1}});
  const auto d = find_improving_defection(a, xv1, 2);
  REQUIRE(d.has_value());
  CHECK(std::find(d->defection.participants.begin(), d->defection.participants.end(), 0) !=
        d->defection.participants.end());
  // Everyone alone: x pairs up with a v_i.
  const auto e = find_improving_defection(a, Network(4), 2);
  REQUIRE(e.has_value());
  CHECK(e->defection.participants == std::vector<Agent>{0, 1});
}

TEST_CASE("stability testing gadget") {
  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const Graph l = random_graph(n, 0.5, rng);
    for (int k : {3, 4}) {
      const StabilityGadget g = gen_stability_test_gadget(l, k);
      CHECK(g.instance.size() == n * (k - 1));
      CHECK(components(g.candidate).block_count() == static_cast<std::size_t>(n));
      CHECK(is_k_stable(g.instance, g.candidate, k).stable != oracle::has_independent_set(l, k));
    }
  }
  std::vector<Edge> k3;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) k3.emplace_back(i, j);
  }
  const StabilityGadget clique = gen_stability_test_gadget(Graph(3, k3), 3);
  CHECK(is_k_stable(clique.instance, clique.candidate, 3).stable);
  const StabilityGadget empty = gen_stability_test_gadget(Graph(3), 3);
  CHECK_FALSE(is_k_stable(empty.instance, empty.candidate, 3).stable);
  CHECK_THROWS_AS(gen_stability_test_gadget(Graph(3), 2), Error);
}

TEST_CASE("random instances are deterministic") {
  CHECK(serialize_instance(gen_random(9, 0.4, 7)) == serialize_instance(gen_random(9, 0.4, 7)));
  CHECK(conflict_graph(gen_random(6, 0.0, 3)).edges().empty());
  CHECK(conflict_graph(gen_random(6, 1.0, 3)).edges().size() == 15);
  CHECK(gen_random(8, 0.5, 1).is_friends_enemies());
}

TEST_CASE("every family generates and round-trips") {
  GeneratorParams p;
  p.n = 4;
  p.rows = 2;
  p.cols = 3;
  p.seed = 9;
  p.pairs = {{0, 1}, {1, 2}};
  for (const auto& f : generator_families()) {
    GeneratorParams q = p;
    if (f == "bn") q.n = 9;
    if (f == "two-cliques") q.n = 6;
    const Generated g = generate(f, q);
    CHECK(parse_instance(serialize_instance(g.instance)) == g.instance);
    const Bundle b{g.instance, g.network, g.schedule};
    const Bundle back = parse_bundle(serialize_bundle(b));
    CHECK(back.instance == g.instance);
    CHECK(back.network == g.network);
    CHECK(back.schedule == g.schedule);
  }
  CHECK_THROWS_AS(generate("nope", p), Error);
}
