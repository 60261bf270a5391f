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

#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "error.hpp"

namespace gossip {

namespace {

constexpr Utility kEnemy = Utility::neg_inf();

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalid, what);
}

// Friendly pairs listed; everything else an enemy pair.
Instance from_friends(int n, const std::vector<Edge>& friends, std::vector<std::string> labels) {
  UtilityTable t(n, kEnemy);
  for (const Edge& e : friends) t.set_pair(e.a, e.b, 1);
  return Instance(std::move(t), true, std::move(labels));
}

void add_clique(std::vector<Edge>& out, const std::vector<Agent>& members) {
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) out.emplace_back(members[x], members[y]);
  }
}

std::vector<std::string> numbered(const std::string& prefix, int from, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(from + i));
  return out;
}

std::vector<std::string> concat(std::vector<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

Instance gen_friends_enemies(int n, const std::vector<Edge>& enemy_pairs) {
  require(n >= 1, "friends-enemies needs n >= 1");
  UtilityTable t(n, 1);
  for (const Edge& e : enemy_pairs) {
    require(e.a != e.b && e.a >= 0 && e.b < n, "enemy pair out of range");
    t.set_pair(e.a, e.b, kEnemy);
  }
  return Instance(std::move(t), true);
}

Agent bn_x(int n, int i) { return 2 * (n - i); }
Agent bn_y(int n, int i) { return 2 * (n - i) + 1; }

Instance gen_Bn(int n) {
  require(n >= 3, "Bn needs n >= 3");
  require(2 * n <= 1 << 14, "Bn size too large");
  std::vector<Edge> enemies;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; 3 * j <= i; ++j) {
      enemies.emplace_back(bn_x(n, i), bn_y(n, j));
      enemies.emplace_back(bn_x(n, j), bn_y(n, i));
    }
  }
  UtilityTable t(2 * n, 1);
  for (const Edge& e : enemies) t.set_pair(e.a, e.b, kEnemy);
  std::vector<std::string> labels;
  for (int i = n; i >= 1; --i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  return Instance(std::move(t), true, std::move(labels));
}

Instance gen_grid(int rows, int cols) {
  require(rows >= 2 && cols >= 2, "grid needs r, c >= 2");
  const int n = rows * cols;
  std::vector<Edge> friends;
  std::vector<std::string> labels;
  for (Agent a = 0; a < n; ++a) {
    labels.push_back("r" + std::to_string(a / cols) + "c" + std::to_string(a % cols));
    for (Agent b = a + 1; b < n; ++b) {
      if (a / cols == b / cols || a % cols == b % cols) friends.emplace_back(a, b);
    }
  }
  return from_friends(n, friends, std::move(labels));
}

Instance gen_fig_pendant_k4() {
  std::vector<Edge> f;
  add_clique(f, {0, 1, 2, 3});
  for (int i = 0; i < 4; ++i) f.emplace_back(i, 4 + i);
  return from_friends(8, f, {"a", "b", "c", "d", "a1", "b1", "c1", "d1"});
}

Instance gen_fig_distinct_stable() {
  std::vector<Edge> f;
  add_clique(f, {0, 1, 2, 3});
  add_clique(f, {4, 5, 6, 7});
  for (int i = 0; i < 4; ++i) add_clique(f, {i, 4 + i, 8 + i});
  return from_friends(12, f,
                      concat({numbered("x", 1, 4), numbered("y", 1, 4), numbered("z", 1, 4)}));
}

Instance gen_fig_k4_triangles() {
  std::vector<Edge> f;
  add_clique(f, {0, 1, 2, 3});
  for (int i = 0; i < 4; ++i) add_clique(f, {i, 4 + i, 8 + i});
  return from_friends(12, f,
                      concat({numbered("a", 1, 4), numbered("b", 1, 4), numbered("c", 1, 4)}));
}

Instance gen_k3_pendants() {
  std::vector<Edge> f;
  add_clique(f, {0, 1, 2});
  for (int i = 0; i < 3; ++i) f.emplace_back(i, 3 + i);
  return from_friends(6, f, {"a", "b", "c", "a1", "b1", "c1"});
}

CycleGadget gen_best_response_cycle(int s_size) {
  require(s_size >= 2, "cycle gadget needs |s| >= 2");
  const int m = s_size;
  const Agent a = m, b = m + 1, c = m + 2, d = m + 3, e = m + 4;
  std::vector<Agent> s(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) s[i] = i;
  std::vector<Edge> f;
  add_clique(f, s);
  for (Agent x : s) {
    f.emplace_back(e, x);
    f.emplace_back(a, x);
    f.emplace_back(c, x);
  }
  for (Agent x : {a, b, c, d}) f.emplace_back(e, x);
  f.emplace_back(a, b);
  f.emplace_back(c, d);
  CycleGadget g{from_friends(m + 5, f, concat({numbered("s", 1, m), {"a", "b", "c", "d", "e"}})),
                Network(), {}};
  std::vector<Edge> start;
  auto se = s;
  se.push_back(e);
  add_clique(start, se);
  start.emplace_back(a, e);
  start.emplace_back(c, d);
  g.start = Network(m + 5, start);
  g.schedule = {
      {{c, e}, {s, {d}}},  // e trades a for c and d; c joins the big component
      {{d}, {}},           // d is now next to its enemies in s
      {{a, b}, {}},
      {{a, e}, {s, {b}}},  // e trades c for a and b
      {{b}, {}},
      {{c, d}, {}},
  };
  return g;
}

Instance gen_stable_marriage(const Preferences& prefs) {
  prefs.validate();
  const int n = prefs.size();
  require(n >= 1, "stable marriage needs n >= 1");
  UtilityTable t(2 * n, kEnemy);
  for (int m = 0; m < n; ++m) {
    for (int p = 0; p < n; ++p) t.set(m, n + prefs.men[m][p], 1 + n - (p + 1));
  }
  for (int w = 0; w < n; ++w) {
    for (int p = 0; p < n; ++p) t.set(n + w, prefs.women[w][p], 1 + n - (p + 1));
  }
  return Instance(std::move(t), false, concat({numbered("m", 1, n), numbered("w", 1, n)}));
}

Instance gen_strong_weak_ties() {
  UtilityTable t(4, 1);
  t.set_pair(0, 1, 5);
  t.set_pair(2, 3, 5);
  t.set_pair(1, 3, kEnemy);
  return Instance(std::move(t), true, {"Anna", "Bob", "Claire", "Daniel"});
}

Instance gen_c_nonexistence(std::int64_t c) {
  require(c >= 1 && c <= Utility::kMaxPairMagnitude, "c out of range");
  UtilityTable t(4, 1);
  t.set_pair(0, 2, c);
  t.set_pair(1, 3, c);
  t.set_pair(2, 3, kEnemy);
  return Instance(std::move(t), true, {"w1", "w2", "m1", "m2"});
}

Instance gen_asymmetric_nonexistence() {
  UtilityTable t(4, 1);
  t.set(1, 2, kEnemy);
  t.set(2, 3, kEnemy);
  t.set(3, 1, kEnemy);
  return Instance(std::move(t), false, {"x", "v1", "v2", "v3"});
}

StabilityGadget gen_stability_test_gadget(const Graph& l, int k) {
  require(k >= 3, "stability gadget needs k >= 3");
  const int n = l.size();
  const int g = k - 1;
  std::vector<Edge> f;
  std::vector<std::vector<Agent>> groups;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::vector<Agent> group;
    labels.push_back("x" + std::to_string(i));
    for (int t = 0; t < g; ++t) {
      group.push_back(i * g + t);
      if (t > 0) labels.push_back("f" + std::to_string(i) + "_" + std::to_string(t));
    }
    add_clique(f, group);
    groups.push_back(group);
    for (int j = i + 1; j < n; ++j) {
      if (!l.has_edge(i, j)) f.emplace_back(i * g, j * g);
    }
  }
  return {from_friends(n * g, f, std::move(labels)),
          network_from_partition(CliquePartition(n * g, groups))};
}

Instance gen_two_cliques_matching(int n) {
  require(n >= 4 && n % 2 == 0, "two-cliques needs even n >= 4");
  const int h = n / 2;
  std::vector<Agent> xs, ys;
  for (int i = 0; i < h; ++i) {
    xs.push_back(i);
    ys.push_back(h + i);
  }
  std::vector<Edge> f;
  add_clique(f, xs);
  add_clique(f, ys);
  for (int i = 1; i < h; ++i) f.emplace_back(i, h + i);
  return from_friends(n, f, concat({numbered("x", 0, h), numbered("y", 0, h)}));
}

CliquePartition two_cliques_matching_partition(int n) {
  const int h = n / 2;
  std::vector<std::vector<Agent>> blocks{{0}, {h}};
  for (int i = 1; i < h; ++i) blocks.push_back({i, h + i});
  return CliquePartition(n, blocks);
}

CliquePartition grid_columns(int rows, int cols) {
  std::vector<std::vector<Agent>> blocks(static_cast<std::size_t>(cols));
  for (int a = 0; a < rows * cols; ++a) blocks[a % cols].push_back(a);
  return CliquePartition(rows * cols, blocks);
}

CliquePartition grid_rows(int rows, int cols) {
  std::vector<std::vector<Agent>> blocks(static_cast<std::size_t>(rows));
  for (int a = 0; a < rows * cols; ++a) blocks[a / cols].push_back(a);
  return CliquePartition(rows * cols, blocks);
}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  return next() < threshold;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Instance gen_random(int n, double enemy_probability, std::uint64_t seed) {
  require(n >= 1, "random needs n >= 1");
  require(enemy_probability >= 0.0 && enemy_probability <= 1.0, "probability outside [0, 1]");
  Rng rng(seed);
  return gen_friends_enemies(n, random_graph(n, enemy_probability, rng).edges());
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Preferences random_preferences(int n, Rng& rng) {
  const auto perm = [&] {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(v[i], v[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return v;
  };
  Preferences p;
  for (int i = 0; i < n; ++i) p.men.push_back(perm());
  for (int i = 0; i < n; ++i) p.women.push_back(perm());
  return p;
}

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> names{
      "friends-enemies", "bn",           "grid",          "pendant-k4",   "distinct-stable",
      "k4-triangles",    "k3-pendants",  "br-cycle",      "stable-marriage", "strong-weak",
      "c-nonexist",      "asym-nonexist", "stability-gadget", "two-cliques", "random"};
  return names;
}

Generated generate(const std::string& family, const GeneratorParams& p) {
  using Fn = std::function<Generated(const GeneratorParams&)>;
  static const std::map<std::string, Fn> table{
      {"friends-enemies", [](const GeneratorParams& q) -> Generated {
         return {gen_friends_enemies(q.n, q.pairs), {}, {}};
       }},
      {"bn", [](const GeneratorParams& q) -> Generated { return {gen_Bn(q.n), {}, {}}; }},
      {"grid", [](const GeneratorParams& q) -> Generated {
         return {gen_grid(q.rows, q.cols), network_from_partition(grid_columns(q.rows, q.cols)),
                 {}};
       }},
      {"pendant-k4", [](const GeneratorParams&) -> Generated {
         return {gen_fig_pendant_k4(), {}, {}};
       }},
      {"distinct-stable", [](const GeneratorParams&) -> Generated {
         return {gen_fig_distinct_stable(), {}, {}};
       }},
      {"k4-triangles", [](const GeneratorParams&) -> Generated {
         return {gen_fig_k4_triangles(), {}, {}};
       }},
      {"k3-pendants", [](const GeneratorParams&) -> Generated {
         return {gen_k3_pendants(), {}, {}};
       }},
      {"br-cycle", [](const GeneratorParams& q) -> Generated {
         auto g = gen_best_response_cycle(q.s);
         return {g.instance, g.start, g.schedule};
       }},
      {"stable-marriage", [](const GeneratorParams& q) -> Generated {
         if (q.prefs) return {gen_stable_marriage(*q.prefs), {}, {}};
         require(q.n >= 1, "stable-marriage needs --n or explicit preferences");
         Rng rng(q.seed);
         return {gen_stable_marriage(random_preferences(q.n, rng)), {}, {}};
       }},
      {"strong-weak", [](const GeneratorParams&) -> Generated {
         return {gen_strong_weak_ties(), {}, {}};
       }},
      {"c-nonexist", [](const GeneratorParams& q) -> Generated {
         return {gen_c_nonexistence(q.c), {}, {}};
       }},
      {"asym-nonexist", [](const GeneratorParams&) -> Generated {
         return {gen_asymmetric_nonexistence(), {}, {}};
       }},
      {"stability-gadget", [](const GeneratorParams& q) -> Generated {
         require(q.n >= 1, "stability-gadget needs --n");
         Graph l(q.n, q.pairs);
         if (q.pairs.empty()) {
           Rng rng(q.seed);
           l = random_graph(q.n, q.p, rng);
         }
         auto g = gen_stability_test_gadget(l, q.k);
         return {g.instance, g.candidate, {}};
       }},
      {"two-cliques", [](const GeneratorParams& q) -> Generated {
         return {gen_two_cliques_matching(q.n),
                 network_from_partition(two_cliques_matching_partition(q.n)), {}};
       }},
      {"random", [](const GeneratorParams& q) -> Generated {
         return {gen_random(q.n, q.p, q.seed), {}, {}};
       }},
  };
  const auto it = table.find(family);
  if (it == table.end()) throw Error(ErrorCode::kInvalid, "unknown family '" + family + "'");
  return it->second(p);
}

}  // namespace gossip
