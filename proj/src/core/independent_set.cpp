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

#include "independent_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bitset.hpp"
#include "error.hpp"

namespace gossip {

namespace {

class IndependenceOracle {
 public:
  IndependenceOracle(const Graph& h, const std::vector<Agent>& candidates)
      : m_(static_cast<int>(candidates.size())) {
    std::vector<int> local(static_cast<std::size_t>(h.size()), -1);
    for (int i = 0; i < m_; ++i) local[candidates[i]] = i;
    adj_.assign(static_cast<std::size_t>(m_), Bitset(m_));
    lists_.assign(static_cast<std::size_t>(m_), {});
    for (const Edge& e : h.edges()) {
      const int a = local[e.a];
      const int b = local[e.b];
      if (a < 0 || b < 0) continue;
      adj_[a].set(b);
      adj_[b].set(a);
      lists_[a].push_back(b);
      lists_[b].push_back(a);
    }
    side_.assign(static_cast<std::size_t>(m_), -1);
    bipartite_ = true;
    for (int s = 0; s < m_ && bipartite_; ++s) {
      if (side_[s] >= 0) continue;
      side_[s] = 0;
      std::vector<int> stack{s};
      while (!stack.empty() && bipartite_) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : lists_[v]) {
          if (side_[w] < 0) {
            side_[w] = 1 - side_[v];
            stack.push_back(w);
          } else if (side_[w] == side_[v]) {
            bipartite_ = false;
          }
        }
      }
    }
  }

  int size() const { return m_; }
  bool bipartite() const { return bipartite_; }
  const Bitset& neighbors(int v) const { return adj_[v]; }

  int alpha(const Bitset& p) {
    if (bipartite_) return p.count() - matching(p);
    best_ = greedy(p);
    expand(p, 0);
    return best_;
  }

 private:
  // Kuhn's augmenting paths from the side-0 vertices of p.
  int matching(const Bitset& p) {
    match_.assign(static_cast<std::size_t>(m_), -1);
    int total = 0;
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      if (side_[v] != 0) continue;
      visited_.assign(static_cast<std::size_t>(m_), 0);
      if (augment(v, p)) ++total;
    }
    return total;
  }

  bool augment(int v, const Bitset& p) {
    for (int w : lists_[v]) {
      if (!p.test(w) || visited_[w]) continue;
      visited_[w] = 1;
      if (match_[w] < 0 || augment(match_[w], p)) {
        match_[w] = v;
        return true;
      }
    }
    return false;
  }

  int greedy(Bitset p) const {
    int size = 0;
    while (!p.none()) {
      int pick = -1;
      int pick_deg = m_ + 1;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        Bitset nb = adj_[v];
        nb &= p;
        const int d = nb.count();
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      ++size;
      p.subtract(adj_[pick]);
      p.reset(pick);
    }
    return size;
  }

  // Number of cliques in a greedy clique cover: an upper bound on alpha.
  int cover(Bitset p) const {
    int cliques = 0;
    while (!p.none()) {
      const int v = p.first();
      Bitset cand = adj_[v];
      cand &= p;
      p.reset(v);
      while (!cand.none()) {
        const int w = cand.first();
        p.reset(w);
        cand.reset(w);
        cand &= adj_[w];
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(Bitset p, int size) {
    // Vertices of degree <= 1 belong to some maximum independent set.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        Bitset nb = adj_[v];
        nb &= p;
        if (nb.count() <= 1) {
          ++size;
          p.subtract(adj_[v]);
          p.reset(v);
          reduced = true;
        }
      }
    }
    if (p.none()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + cover(p) <= best_) return;
    int pick = -1;
    int pick_deg = -1;
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      Bitset nb = adj_[v];
      nb &= p;
      const int d = nb.count();
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    Bitset with = p;
    with.subtract(adj_[pick]);
    with.reset(pick);
    expand(with, size + 1);
    p.reset(pick);
    expand(p, size);
  }

  int m_;
  std::vector<Bitset> adj_;
  std::vector<std::vector<int>> lists_;
  std::vector<int> side_;
  bool bipartite_ = true;
  std::vector<int> match_;
  std::vector<char> visited_;
  int best_ = 0;
};

}  // namespace

std::vector<Agent> max_independent_set(const Graph& h, const std::vector<Agent>& candidates,
                                       int bound) {
  std::vector<Agent> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  IndependenceOracle oracle(h, sorted);
  if (!oracle.bipartite() && oracle.size() > bound) {
    throw Error(ErrorCode::kOracleBound,
                "independent set on " + std::to_string(oracle.size()) +
                    " vertices exceeds the exact-solver bound of " + std::to_string(bound));
  }
  Bitset live(oracle.size());
  for (int i = 0; i < oracle.size(); ++i) live.set(i);
  int remaining = oracle.alpha(live);
  std::vector<Agent> chosen;
  // Take each vertex, in ascending order, whenever some maximum set extends
  // the current choice with it.
  for (int v = 0; v < oracle.size() && remaining > 0; ++v) {
    if (!live.test(v)) continue;
    Bitset with = live;
    with.subtract(oracle.neighbors(v));
    with.reset(v);
    if (1 + oracle.alpha(with) == remaining) {
      chosen.push_back(sorted[v]);
      live = with;
      --remaining;
    } else {
      live.reset(v);
    }
  }
  return chosen;
}

std::vector<Agent> max_independent_set(const Graph& h, int bound) {
  std::vector<Agent> all(static_cast<std::size_t>(h.size()));
  std::iota(all.begin(), all.end(), 0);
  return max_independent_set(h, all, bound);
}

bool is_independent(const Graph& h, const std::vector<Agent>& members) {
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      if (h.has_edge(members[x], members[y])) return false;
    }
  }
  return true;
}

}  // namespace gossip
