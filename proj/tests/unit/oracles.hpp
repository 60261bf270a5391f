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

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the plain data types.
#ifndef GOSSIPNET_TESTS_ORACLES_HPP
#define GOSSIPNET_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "instance.hpp"

namespace oracle {

using gossip::Agent;
using gossip::Edge;
using gossip::Graph;
using gossip::Instance;
using Blocks = std::vector<std::vector<int>>;

constexpr std::int64_t kNegInf = INT64_MIN;

// Component label per node via union-find.
inline std::vector<int> component_labels(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : edges) parent[find(e.a)] = find(e.b);
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = find(i);
  return label;
}

inline Blocks components(int n, const std::vector<Edge>& edges) {
  const auto label = component_labels(n, edges);
  Blocks out;
  std::vector<int> index(n, -1);
  for (int i = 0; i < n; ++i) {
    if (index[label[i]] < 0) {
      index[label[i]] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[label[i]]].push_back(i);
  }
  return out;
}

inline std::int64_t raw(const Instance& inst, int i, int j) { return inst.u(i, j).raw(); }

// Sum of u(i, j) over the component of i; kNegInf if any term is.
inline std::int64_t utility(const Instance& inst, const std::vector<int>& label, int i) {
  std::int64_t total = 0;
  for (int j = 0; j < inst.size(); ++j) {
    if (j == i || label[j] != label[i]) continue;
    const std::int64_t v = raw(inst, i, j);
    if (v == kNegInf) return kNegInf;
    total += v;
  }
  return total;
}

inline std::vector<Edge> clique_edges(const Blocks& blocks) {
  std::vector<Edge> out;
  for (const auto& b : blocks) {
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = x + 1; y < b.size(); ++y) out.emplace_back(b[x], b[y]);
    }
  }
  return out;
}

inline std::vector<int> labels_of(int n, const Blocks& blocks) {
  std::vector<int> label(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int a : blocks[b]) label[a] = static_cast<int>(b);
  }
  return label;
}

// Welfare doubled: sum over ordered co-block pairs.
inline std::int64_t welfare2(const Instance& inst, const Blocks& blocks) {
  std::int64_t total = 0;
  for (const auto& b : blocks) {
    for (int i : b) {
      for (int j : b) {
        if (i == j) continue;
        const std::int64_t v = raw(inst, i, j);
        if (v == kNegInf) return kNegInf;
        total += v;
      }
    }
  }
  return total;
}

// Every set partition of 0..n-1, recursive insertion.
inline void for_each_partition(int n, const std::function<void(const Blocks&)>& visit) {
  Blocks cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
}

inline bool has_edge(const Graph& g, int a, int b) {
  for (const Edge& e : g.edges()) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
  }
  return false;
}

inline int max_independent_size(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if ((m >> e.a & 1u) && (m >> e.b & 1u)) ok = false;
    }
    if (ok) best = std::max(best, __builtin_popcount(m));
  }
  return best;
}

inline bool has_independent_set(const Graph& g, int k) { return max_independent_size(g) >= k; }

inline int chromatic(const Graph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  for (int c = 1; c <= n; ++c) {
    std::vector<int> col(n, -1);
    std::function<bool(int)> rec = [&](int v) {
      if (v == n) return true;
      for (int x = 0; x < c; ++x) {
        bool ok = true;
        for (int w = 0; w < v; ++w) {
          if (col[w] == x && has_edge(g, v, w)) ok = false;
        }
        if (!ok) continue;
        col[v] = x;
        if (rec(v + 1)) return true;
      }
      col[v] = -1;
      return false;
    };
    if (rec(0)) return c;
  }
  return n;
}

// Literal k-defection search: every S with |S| <= k forms all edges inside
// S and keeps an arbitrary subset of its edges to the outside. Returns true
// when some choice strictly improves every member of S. Exponential; tests
// keep n small.
inline bool literal_improving_defection(const Instance& inst, const std::vector<Edge>& net, int k) {
  const int n = inst.size();
  const auto before_label = component_labels(n, net);
  std::vector<std::int64_t> before(n);
  for (int i = 0; i < n; ++i) before[i] = utility(inst, before_label, i);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size > k) continue;
    std::vector<Edge> fixed;
    std::vector<Edge> optional;
    for (const Edge& e : net) {
      const bool in_a = s >> e.a & 1u;
      const bool in_b = s >> e.b & 1u;
      if (in_a && in_b) continue;
      if (in_a || in_b) {
        optional.push_back(e);
      } else {
        fixed.push_back(e);
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if ((s >> a & 1u) && (s >> b & 1u)) fixed.emplace_back(a, b);
      }
    }
    const std::size_t m = optional.size();
    for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << m); ++keep) {
      std::vector<Edge> edges = fixed;
      for (std::size_t t = 0; t < m; ++t) {
        if (keep >> t & 1u) edges.push_back(optional[t]);
      }
      const auto label = component_labels(n, edges);
      bool all = true;
      for (int i = 0; i < n && all; ++i) {
        if (!(s >> i & 1u)) continue;
        all = utility(inst, label, i) > before[i];
      }
      if (all) return true;
    }
  }
  return false;
}

inline gossip::Network network(int n, const std::vector<Edge>& edges) { return {n, edges}; }

}  // namespace oracle

#endif  // GOSSIPNET_TESTS_ORACLES_HPP
