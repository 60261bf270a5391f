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

#ifndef GOSSIPNET_CORE_GENERATORS_HPP
#define GOSSIPNET_CORE_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "construct.hpp"
#include "graph.hpp"
#include "instance.hpp"
#include "stability.hpp"

namespace gossip {

/// Symmetric {-inf, 1}: every listed pair is an enemy pair.
Instance gen_friends_enemies(int n, const std::vector<Edge>& enemy_pairs);

/// 2n agents x_1..x_n, y_1..y_n with enemy pairs (x_i, y_j), (x_j, y_i)
/// whenever 1 <= j <= i / 3. Agents are stored in descending index order,
/// x_i at 2(n - i) and y_i right after it.
Instance gen_Bn(int n);
Agent bn_x(int n, int i);
Agent bn_y(int n, int i);

/// r * c agents on a grid; (row, col) sits at row * c + col. Agents sharing
/// a row or a column are friends, all others enemies.
Instance gen_grid(int rows, int cols);

/// a, b, c, d, a1, b1, c1, d1: K4 on a..d plus the pendant pairs.
Instance gen_fig_pendant_k4();
/// x1..x4, y1..y4, z1..z4: K4 on the x's, K4 on the y's, triangles x_i y_i z_i.
Instance gen_fig_distinct_stable();
/// a1..a4, b1..b4, c1..c4: triangles a_i b_i c_i plus K4 on the a's.
Instance gen_fig_k4_triangles();
/// a, b, c, a1, b1, c1: K3 on a, b, c plus the pendant pairs.
Instance gen_k3_pendants();

struct CycleGadget {
  Instance instance;
  Network start;
  std::vector<Defection> schedule;
};

/// Clique s of `s_size` agents followed by a, b, c, d, e, with the start
/// network and the six scripted moves that lead back to it.
CycleGadget gen_best_response_cycle(int s_size);

/// Men 0..n-1, women n..2n-1; u = 1 + n - p for the p-th ranked partner,
/// -inf within a gender.
Instance gen_stable_marriage(const Preferences& prefs);

/// Anna, Bob, Claire, Daniel: strong ties Anna-Bob and Claire-Daniel of
/// weight 5, Bob and Daniel enemies, every other pair 1.
Instance gen_strong_weak_ties();

/// w1, w2, m1, m2: u(w1, m1) = u(w2, m2) = c, m1 and m2 enemies, others 1.
Instance gen_c_nonexistence(std::int64_t c);

/// x, v1, v2, v3 with the one-directional entries v1->v2, v2->v3, v3->v1
/// at -inf and every other ordered pair at 1.
Instance gen_asymmetric_nonexistence();

struct StabilityGadget {
  Instance instance;
  Network candidate;
};

/// Each vertex x_i of L gets k - 2 private friends (group i occupies
/// i(k-1) .. i(k-1)+k-2, x_i first). Friends are enemies of everyone
/// outside their group; x_i and x_j are enemies iff adjacent in L.
/// The candidate network is the groups as cliques.
StabilityGadget gen_stability_test_gadget(const Graph& l, int k);

/// Friend cliques x_0..x_{h-1} and y_0..y_{h-1} (h = n / 2) with friendly
/// pairs x_i y_i for i >= 1; every other pair is an enemy pair.
Instance gen_two_cliques_matching(int n);
/// The partition into pairs x_i y_i plus singletons x_0, y_0.
CliquePartition two_cliques_matching_partition(int n);
CliquePartition grid_columns(int rows, int cols);
CliquePartition grid_rows(int rows, int cols);

/// Deterministic stream used by every random family.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// True with probability p, compared on the raw 64-bit draw.
  bool bernoulli(double p);
  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Symmetric {-inf, 1}; pairs (i, j), i < j in lexicographic order, are
/// enemies with probability p.
Instance gen_random(int n, double enemy_probability, std::uint64_t seed);
/// Random simple graph with edge probability p, pairs in lexicographic order.
Graph random_graph(int n, double p, Rng& rng);
Preferences random_preferences(int n, Rng& rng);

/// Named family for the command line. Families: friends-enemies, bn, grid,
/// pendant-k4, distinct-stable, k4-triangles, k3-pendants, br-cycle,
/// stable-marriage, strong-weak, c-nonexist, asym-nonexist,
/// stability-gadget, two-cliques, random.
struct GeneratorParams {
  int n = 0;
  int rows = 0;
  int cols = 0;
  int k = 3;
  int s = 6;
  std::int64_t c = 5;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::vector<Edge> pairs;
  std::optional<Preferences> prefs;
};

struct Generated {
  Instance instance;
  std::optional<Network> network;
  std::optional<std::vector<Defection>> schedule;
};

Generated generate(const std::string& family, const GeneratorParams& params);
const std::vector<std::string>& generator_families();

}  // namespace gossip

#endif  // GOSSIPNET_CORE_GENERATORS_HPP
