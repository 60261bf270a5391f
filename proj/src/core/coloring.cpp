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

#include "coloring.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace gossip {

namespace {

Coloring canonical(std::vector<int> color) {
  std::vector<int> relabel(color.size() + 1, -1);
  int next = 0;
  for (int& c : color) {
    if (relabel[c] < 0) relabel[c] = next++;
    c = relabel[c];
  }
  return Coloring{next, std::move(color)};
}

// DSATUR-ordered backtracking for k colors.
class KColorer {
 public:
  KColorer(const Graph& h, int k) : n_(h.size()), k_(k), adj_(h.adjacency()) {
    color_.assign(static_cast<std::size_t>(n_), -1);
    forbid_.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(k), 0));
  }

  bool solve(int colored) {
    if (colored == n_) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < k_; ++c) sat += forbid_[v][c] > 0 ? 1 : 0;
      const int deg = static_cast<int>(adj_[v].size());
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat == k_) return false;
    // Colors above the highest used one are interchangeable.
    int used = 0;
    for (int c : color_) used = std::max(used, c + 1);
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbid_[pick][c] > 0) continue;
      color_[pick] = c;
      for (int w : adj_[pick]) ++forbid_[w][c];
      if (solve(colored + 1)) return true;
      for (int w : adj_[pick]) --forbid_[w][c];
      color_[pick] = -1;
    }
    return false;
  }

  const std::vector<int>& color() const { return color_; }

 private:
  int n_;
  int k_;
  std::vector<std::vector<Agent>> adj_;
  std::vector<int> color_;
  std::vector<std::vector<int>> forbid_;
};

std::optional<std::vector<int>> two_coloring(const Graph& h) {
  const auto adj = h.adjacency();
  std::vector<int> color(static_cast<std::size_t>(h.size()), -1);
  for (int s = 0; s < h.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

int greedy_clique(const Graph& h) {
  const auto adj = h.adjacency();
  int best = h.size() > 0 ? 1 : 0;
  for (int s = 0; s < h.size(); ++s) {
    std::vector<int> clique{s};
    for (int w : adj[s]) {
      const bool joins = std::all_of(clique.begin(), clique.end(),
                                     [&](int c) { return h.has_edge(c, w); });
      if (joins) clique.push_back(w);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace

std::optional<Coloring> k_coloring(const Graph& h, int k) {
  if (h.size() == 0) return Coloring{0, {}};
  if (k <= 0) return std::nullopt;
  KColorer colorer(h, k);
  if (!colorer.solve(0)) return std::nullopt;
  return canonical(colorer.color());
}

Coloring chromatic_number(const Graph& h, int bound) {
  if (h.size() == 0) return Coloring{0, {}};
  if (h.edges().empty()) return Coloring{1, std::vector<int>(static_cast<std::size_t>(h.size()), 0)};
  if (auto two = two_coloring(h)) return canonical(std::move(*two));
  if (h.size() > bound) {
    throw Error(ErrorCode::kOracleBound,
                "coloring on " + std::to_string(h.size()) +
                    " vertices exceeds the exact-solver bound of " + std::to_string(bound));
  }
  for (int k = std::max(3, greedy_clique(h));; ++k) {
    if (auto c = k_coloring(h, k)) return *c;
  }
}

}  // namespace gossip
