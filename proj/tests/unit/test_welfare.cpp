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

#include "coloring.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "independent_set.hpp"
#include "oracles.hpp"
#include "stability.hpp"
#include "welfare.hpp"

using namespace gossip;

namespace {

Network net_of(int n, std::vector<std::vector<Agent>> blocks) {
  return network_from_partition(CliquePartition(n, std::move(blocks)));
}

oracle::Blocks as_blocks(const CliquePartition& p) {
  oracle::Blocks out;
  for (const auto& b : p.blocks()) out.emplace_back(b.begin(), b.end());
  return out;
}

}  // namespace

TEST_CASE("maximum independent sets match brute force") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng.below(14));
    const Graph g = random_graph(n, 0.1 + 0.2 * static_cast<double>(t % 4), rng);
    const auto s = max_independent_set(g, 48);
    CHECK(is_independent(g, s));
    CHECK(static_cast<int>(s.size()) == oracle::max_independent_size(g));
  }
}

TEST_CASE("chromatic number matches brute force") {
  Rng rng(42);
  for (int t = 0; t < 120; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, 0.2 + 0.2 * static_cast<double>(t % 4), rng);
    const Coloring c = chromatic_number(g, 40);
    CHECK(c.colors == oracle::chromatic(g));
    for (const Edge& e : g.edges()) CHECK(c.color[e.a] != c.color[e.b]);
    CHECK(k_coloring(g, c.colors).has_value());
    if (c.colors > 1) CHECK_FALSE(k_coloring(g, c.colors - 1).has_value());
  }
}

TEST_CASE("chromatic number of the families") {
  CHECK(chromatic_number(conflict_graph(gen_Bn(9)), 40).colors == 2);
  CHECK(chromatic_number(conflict_graph(gen_Bn(81)), 40).colors == 2);
  CHECK(chromatic_number(conflict_graph(gen_k3_pendants()), 40).colors == 3);
  for (int r = 2; r <= 4; ++r) {
    for (int c = 2; c <= 4; ++c) {
      CHECK(chromatic_number(conflict_graph(gen_grid(r, c)), 40).colors == std::min(r, c));
    }
  }
}

TEST_CASE("optimal welfare matches brute force partitions") {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Instance inst = gen_random(n, 0.4, rng.next());
    std::int64_t best = oracle::kNegInf;
    int min_blocks = n + 1;
    oracle::for_each_partition(n, [&](const oracle::Blocks& b) {
      const std::int64_t w = oracle::welfare2(inst, b);
      best = std::max(best, w);
      if (w != oracle::kNegInf) min_blocks = std::min(min_blocks, static_cast<int>(b.size()));
    });
    const auto opt = optimal_total_welfare(inst);
    CHECK(opt.value.doubled.raw() == best);
    CHECK(oracle::welfare2(inst, as_blocks(opt.witness)) == best);
    CHECK(min_conflict_free_blocks(inst) == min_blocks);
    for (const auto& p : optimal_partitions(inst)) CHECK(oracle::welfare2(inst, as_blocks(p)) == best);
  }
}

TEST_CASE("welfare optima are 2-stable") {
  Rng rng(44);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const Instance inst = gen_random(n, 0.35, rng.next());
    for (const auto& p : optimal_partitions(inst)) {
      CHECK(is_k_stable(inst, network_from_partition(p), 2).stable);
    }
  }
}

TEST_CASE("welfare oracle examples") {
  const auto pend = optimal_total_welfare(gen_fig_pendant_k4());
  CHECK(pend.value.to_string() == "6");
  CHECK(pend.witness == CliquePartition(8, {{0, 1, 2, 3}, {4}, {5}, {6}, {7}}));
  const auto tri = optimal_total_welfare(gen_fig_k4_triangles());
  CHECK(tri.value.to_string() == "12");
  CHECK(tri.witness == CliquePartition(12, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}}));
  std::vector<Edge> every;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) every.emplace_back(i, j);
  }
  const auto none = optimal_total_welfare(gen_friends_enemies(4, every));
  CHECK(none.value.to_string() == "0");
  CHECK(none.witness == CliquePartition::singletons(4));
  OracleOptions small;
  small.oracle_bound = 6;
  CHECK_THROWS_AS(optimal_total_welfare(gen_fig_pendant_k4(), small), Error);
}

TEST_CASE("enumeration examples") {
  const auto distinct = enumerate_stable_networks(gen_fig_distinct_stable(), 2);
  const CliquePartition ten(12, {{0, 1, 2, 3}, {4, 8}, {5, 9}, {6, 10}, {7, 11}});
  CHECK(std::find(distinct.begin(), distinct.end(), ten) != distinct.end());
  CHECK(total_welfare(gen_fig_distinct_stable(), ten).to_string() == "10");
  CHECK(enumerate_stable_networks(gen_c_nonexistence(5), 2).empty());
  CHECK(enumerate_stable_networks(gen_friends_enemies(1, {}), 2).size() == 1);
}

TEST_CASE("enumeration agrees with brute force") {
  Rng rng(45);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Instance inst = gen_random(n, 0.4, rng.next());
    for (int k = 1; k <= 3; ++k) {
      std::size_t count = 0;
      oracle::for_each_partition(n, [&](const oracle::Blocks& b) {
        if (!oracle::literal_improving_defection(inst, oracle::clique_edges(b), k)) ++count;
      });
      CHECK(enumerate_stable_networks(inst, k).size() == count);
    }
  }
}

TEST_CASE("figure gadget numbers") {
  const Instance d = gen_fig_distinct_stable();
  CHECK(min_conflict_free_blocks(d) == 4);
  CHECK(optimal_total_welfare(d).value.to_string() == "12");
  CHECK(total_welfare(d, CliquePartition(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8}, {9}, {10}, {11}}))
            .to_string() == "12");

  const Instance p = gen_fig_pendant_k4();
  CHECK(min_conflict_free_blocks(p) == 4);
  CHECK(is_k_stable(p, net_of(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}), 2).stable);
  CHECK(is_k_stable(p, net_of(8, {{0, 1, 2, 3}, {4}, {5}, {6}, {7}}), 2).stable);

  const Instance t = gen_fig_k4_triangles();
  const Network tris = net_of(12, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}});
  const auto defect = find_improving_defection(t, tris, 4);
  REQUIRE(defect.has_value());
  CHECK(defect->defection.participants == std::vector<Agent>{0, 1, 2, 3});
  const CliquePartition k4(12, {{0, 1, 2, 3}, {4, 8}, {5, 9}, {6, 10}, {7, 11}});
  CHECK(is_k_stable(t, network_from_partition(k4), 4).stable);
  CHECK(total_welfare(t, k4).to_string() == "10");
  const auto report = welfare_report(t, 4, Metric::kTotalUtility);
  REQUIRE(report.pos.has_value());
  CHECK(report.pos->value == Rational(6, 5));

  const Instance k3 = gen_k3_pendants();
  CHECK(total_welfare(k3, CliquePartition(6, {{0, 3}, {1, 4}, {2, 5}})).to_string() == "3");
  for (const auto& s : enumerate_stable_networks(k3, 3)) CHECK(s.block_count() >= 4);
}

TEST_CASE("welfare report ratios") {
  const auto r = welfare_report(gen_fig_distinct_stable(), 2, Metric::kComponentCount);
  CHECK(r.optimum.value == 4);
  REQUIRE(r.best_stable.has_value());
  CHECK(r.best_stable->value == 4);
  CHECK(r.pos->value == Rational(1, 1));
  CHECK(r.worst_stable->value >= 5);

  const auto none = welfare_report(gen_c_nonexistence(5), 2, Metric::kTotalUtility);
  CHECK(none.nonexistent());
  CHECK_FALSE(none.pos.has_value());

  CHECK(Ratio::of(0, 0).value == Rational(1, 1));
  CHECK(Ratio::of(3, 0).unbounded);
  CHECK(Ratio::of(6, 4).value == Rational(3, 2));
}

TEST_CASE("two cliques with a matching") {
  const int n = 8;
  const Instance inst = gen_two_cliques_matching(n);
  const CliquePartition m = two_cliques_matching_partition(n);
  CHECK(is_k_stable(inst, network_from_partition(m), 2).stable);
  const auto check = poa_bound_check(inst, 2, two_cliques_poa_bound(n));
  CHECK(check.holds);
  REQUIRE(check.report.poa.has_value());
  CHECK(check.report.poa->value >= two_cliques_poa_bound(n));
}

TEST_CASE("grid families") {
  const Instance g = gen_grid(3, 4);
  for (int k = 1; k <= 3; ++k) {
    CHECK(is_k_stable(g, network_from_partition(grid_columns(3, 4)), k).stable);
  }
  // Conflict-free sets of the grid lie in one row or one column.
  const ConflictGraph h = conflict_graph(gen_grid(3, 3));
  for (std::uint32_t m = 1; m < (1u << 9); ++m) {
    std::vector<Agent> s;
    for (int i = 0; i < 9; ++i) {
      if (m >> i & 1u) s.push_back(i);
    }
    if (!is_independent(h, s)) continue;
    bool same_row = true;
    bool same_col = true;
    for (Agent a : s) {
      same_row = same_row && a / 3 == s[0] / 3;
      same_col = same_col && a % 3 == s[0] % 3;
    }
    CHECK((same_row || same_col));
  }
  CHECK(total_welfare(g, grid_columns(3, 4)).to_string() == "12");
  CHECK(total_welfare(g, grid_rows(3, 4)).to_string() == "18");
}
