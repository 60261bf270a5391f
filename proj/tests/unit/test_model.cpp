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

#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "instance.hpp"
#include "oracles.hpp"

using namespace gossip;

TEST_CASE("utility arithmetic absorbs negative infinity and checks overflow") {
  CHECK((Utility(3) + Utility(4)) == Utility(7));
  CHECK((Utility(3) + Utility::neg_inf()).is_neg_inf());
  CHECK(Utility::neg_inf() < Utility(-1000000));
  CHECK_THROWS_AS(Utility(INT64_MAX) + Utility(1), Error);
  CHECK(scale(Utility::neg_inf(), 0) == Utility(0));
  CHECK(Utility::neg_inf().to_string() == "-inf");
}

TEST_CASE("welfare prints halves") {
  CHECK(Welfare{Utility(7)}.to_string() == "3.5");
  CHECK(Welfare{Utility(12)}.to_string() == "6");
  CHECK(Welfare{Utility::neg_inf()}.to_string() == "-inf");
}

TEST_CASE("rationals reduce and compare exactly") {
  CHECK(Rational(12, 10) == Rational(6, 5));
  CHECK(Rational(6, 5).to_string() == "6/5");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("graphs reject self loops and merge duplicates") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  const Graph g(3, {{1, 0}, {0, 1}});
  CHECK(g.edges().size() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("clique partition validation") {
  CHECK_THROWS_AS(CliquePartition(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(CliquePartition(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(CliquePartition(2, {{0, 1}, {}}), Error);
  const CliquePartition p(4, {{3, 1}, {2, 0}});
  CHECK(p.blocks() == std::vector<std::vector<Agent>>{{0, 2}, {1, 3}});
}

TEST_CASE("components and cliqueify agree with union-find on random graphs") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Graph g = random_graph(n, 0.05 + 0.3 * static_cast<double>(t % 4) / 3.0, rng);
    const Network net(n, g.edges());
    const CliquePartition c = components(net);
    CHECK(c.blocks() == oracle::components(n, g.edges()));
    const Network q = cliqueify(net);
    CHECK(components(q) == c);
    CHECK(is_clique_partition(q));
    CHECK(cliqueify(q) == q);
  }
}

TEST_CASE("cliqueify examples") {
  CHECK(cliqueify(Network(0)).edges().empty());
  const Network path(3, {{0, 1}, {1, 2}});
  CHECK(cliqueify(path) == Network(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_FALSE(is_clique_partition(path));
}

TEST_CASE("node utility examples") {
  const Instance friends = gen_friends_enemies(5, {});
  const Network k5 = network_from_partition(CliquePartition(5, {{0, 1, 2, 3, 4}}));
  CHECK(node_utility(friends, k5, 0) == Utility(4));
  const Instance one_enemy = gen_friends_enemies(3, {{0, 2}});
  const Network path(3, {{0, 1}, {1, 2}});
  CHECK(node_utility(one_enemy, path, 0).is_neg_inf());
  CHECK(node_utility(one_enemy, path, 1) == Utility(2));
  CHECK(node_utility(one_enemy, Network(3), 1) == Utility(0));
}

TEST_CASE("total welfare examples") {
  CHECK(total_welfare(gen_fig_pendant_k4(), CliquePartition(8, {{0, 1, 2, 3}, {4}, {5}, {6}, {7}}))
            .doubled == Utility(12));
  CHECK(total_welfare(gen_friends_enemies(4, {}), Network(4)).doubled == Utility(0));
  CHECK(total_welfare(gen_fig_k4_triangles(),
                      CliquePartition(12, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}}))
            .doubled == Utility(24));
}

TEST_CASE("utilities and welfare depend only on components") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Instance inst = gen_random(n, 0.3, rng.next());
    const Graph g = random_graph(n, 0.25, rng);
    const Network net(n, g.edges());
    const auto label = oracle::component_labels(n, g.edges());
    for (int i = 0; i < n; ++i) {
      CHECK(node_utility(inst, net, i) == node_utility(inst, cliqueify(net), i));
      CHECK(node_utility(inst, net, i).raw() == oracle::utility(inst, label, i));
    }
    CHECK(total_welfare(inst, net).doubled.raw() ==
          oracle::welfare2(inst, oracle::components(n, g.edges())));
  }
}

TEST_CASE("conflict graph uses either direction") {
  const Instance a = gen_asymmetric_nonexistence();
  const ConflictGraph h = conflict_graph(a);
  CHECK(h.edges().size() == 3);
  CHECK_FALSE(a.symmetric());
  const Instance bn = gen_Bn(9);
  CHECK(conflict_graph(bn).edges().size() == 24);
}

TEST_CASE("instances enforce their invariants") {
  UtilityTable t(2, Utility(1));
  t.set(0, 1, Utility(2));
  CHECK_THROWS_AS(Instance(t, true), Error);
  CHECK_NOTHROW(Instance(t, false));
  UtilityTable big(2, Utility(1));
  big.set_pair(0, 1, Utility((std::int64_t{1} << 31) + 1));
  CHECK_THROWS_AS(Instance(big, true), Error);
  CHECK_THROWS_AS(Instance(UtilityTable(2, Utility(1)), true, {"only-one"}), Error);
  CHECK(gen_friends_enemies(3, {{0, 1}}).is_friends_enemies());
  CHECK_FALSE(gen_strong_weak_ties().is_friends_enemies());
  CHECK_THROWS_AS(require_friends_enemies(gen_strong_weak_ties(), "test"), Error);
}
