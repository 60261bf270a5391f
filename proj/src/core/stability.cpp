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

#include "stability.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "error.hpp"

namespace gossip {

namespace {

constexpr std::int64_t kNeg = std::numeric_limits<std::int64_t>::min();

Utility from_raw(std::int64_t v) { return v == kNeg ? Utility::neg_inf() : Utility(v); }

// Sums stay far from overflow: |u| <= 2^31 and at most 64 agents.
std::int64_t add(std::int64_t a, std::int64_t b) {
  return (a == kNeg || b == kNeg) ? kNeg : a + b;
}

bool lowest_first(AgentMask a, AgentMask b) {
  return std::countr_zero(a) < std::countr_zero(b);
}

}  // namespace

std::vector<std::vector<Agent>> residual_components(const Network& net,
                                                    std::span<const Agent> participants) {
  const int n = net.size();
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (Agent p : participants) {
    if (p < 0 || p >= n) throw Error(ErrorCode::kInvalid, "participant out of range");
    in_s[p] = 1;
  }
  std::vector<Edge> kept;
  for (const Edge& e : net.edges()) {
    if (!in_s[e.a] && !in_s[e.b]) kept.push_back(e);
  }
  std::vector<std::vector<Agent>> out;
  const CliquePartition parts = components(Network(n, std::move(kept)));
  for (const auto& block : parts.blocks()) {
    if (!in_s[block.front()]) out.push_back(block);
  }
  return out;
}

Network apply_defection(const Network& net, const Defection& d) {
  const int n = net.size();
  if (d.participants.empty()) throw Error(ErrorCode::kInvalid, "defection without participants");
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (Agent p : d.participants) {
    if (p < 0 || p >= n) throw Error(ErrorCode::kInvalid, "participant out of range");
    if (in_s[p]) throw Error(ErrorCode::kInvalid, "duplicate participant");
    in_s[p] = 1;
  }
  const auto residual = residual_components(net, d.participants);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < residual.size(); ++c) {
    for (Agent a : residual[c]) comp_of[a] = static_cast<int>(c);
  }
  const auto adj = net.adjacency();
  std::vector<char> keep(residual.size(), 0);
  for (auto attached : d.attached) {
    std::sort(attached.begin(), attached.end());
    const auto it = std::find(residual.begin(), residual.end(), attached);
    if (it == residual.end()) {
      throw Error(ErrorCode::kInvalid, "attachment is not a residual component");
    }
    const std::size_t c = static_cast<std::size_t>(it - residual.begin());
    bool adjacent = false;
    for (Agent p : d.participants) {
      for (Agent q : adj[p]) adjacent = adjacent || comp_of[q] == static_cast<int>(c);
    }
    if (!adjacent) {
      throw Error(ErrorCode::kInvalid,
                  "attached component holds no original neighbor of the participants");
    }
    keep[c] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : net.edges()) {
    const bool sa = in_s[e.a] != 0;
    const bool sb = in_s[e.b] != 0;
    if (!sa && !sb) {
      edges.push_back(e);
    } else if (sa != sb) {
      const Agent other = sa ? e.b : e.a;
      if (keep[comp_of[other]]) edges.push_back(e);
    }
  }
  for (std::size_t x = 0; x < d.participants.size(); ++x) {
    for (std::size_t y = x + 1; y < d.participants.size(); ++y) {
      edges.emplace_back(d.participants[x], d.participants[y]);
    }
  }
  return Network(n, std::move(edges));
}

struct DefectionSearch::View {
  std::vector<AgentMask> adj;
  std::vector<AgentMask> comp;
  std::vector<std::int64_t> before;
  bool cliques = false;
};

DefectionSearch::DefectionSearch(const Instance& inst) : n_(inst.size()) {
  if (n_ > kMaxMaskAgents) {
    throw Error(ErrorCode::kInvalid, "defection search supports at most 64 agents");
  }
  table_.resize(static_cast<std::size_t>(n_ * n_));
  enemies_.assign(static_cast<std::size_t>(n_), 0);
  cap_.assign(static_cast<std::size_t>(n_), 0);
  for (Agent i = 0; i < n_; ++i) {
    for (Agent j = 0; j < n_; ++j) {
      const Utility x = inst.u(i, j);
      table_[static_cast<std::size_t>(i * n_ + j)] = x.raw();
      if (i == j) continue;
      if (x.is_neg_inf() || inst.u(j, i).is_neg_inf()) enemies_[i] |= bit(j);
      if (x.is_finite() && x.raw() > 0) cap_[i] += x.raw();
    }
  }
}

std::optional<DefectionReport> DefectionSearch::first(const Network& net, int k) const {
  std::optional<DefectionReport> found;
  if (net.size() != n_) throw Error(ErrorCode::kInvalid, "network and instance sizes differ");
  for_each(net, k, [&](const DefectionReport& r) {
    found = r;
    return false;
  });
  return found;
}

void DefectionSearch::for_each(const Network& net, int k, const DefectionVisitor& visit) const {
  if (net.size() != n_) throw Error(ErrorCode::kInvalid, "network and instance sizes differ");
  View view;
  view.adj.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : net.edges()) {
    view.adj[e.a] |= bit(e.b);
    view.adj[e.b] |= bit(e.a);
  }
  view.comp.assign(static_cast<std::size_t>(n_), 0);
  const CliquePartition parts = components(net);
  for (const auto& block : parts.blocks()) {
    const AgentMask m = mask_of(block);
    for (Agent a : block) view.comp[a] = m;
  }
  view.cliques = is_clique_partition(net);
  view.before.assign(static_cast<std::size_t>(n_), 0);
  for (Agent i = 0; i < n_; ++i) {
    std::int64_t total = 0;
    for_each_bit(view.comp[i] & ~bit(i), [&](Agent j) { total = add(total, u(i, j)); });
    view.before[i] = total;
  }
  search(view, k, visit);
}

std::optional<DefectionReport> DefectionSearch::first(const std::vector<AgentMask>& blocks,
                                                      int k) const {
  View view;
  view.adj.assign(static_cast<std::size_t>(n_), 0);
  view.comp.assign(static_cast<std::size_t>(n_), 0);
  view.before.assign(static_cast<std::size_t>(n_), 0);
  view.cliques = true;
  for (AgentMask b : blocks) {
    for_each_bit(b, [&](Agent a) {
      view.comp[a] = b;
      view.adj[a] = b & ~bit(a);
      std::int64_t total = 0;
      for_each_bit(b & ~bit(a), [&](Agent j) { total = add(total, u(a, j)); });
      view.before[a] = total;
    });
  }
  std::optional<DefectionReport> found;
  search(view, k, [&](const DefectionReport& r) {
    found = r;
    return false;
  });
  return found;
}

bool DefectionSearch::search(const View& view, int k, const DefectionVisitor& visit) const {
  if (k < 1) throw Error(ErrorCode::kInvalid, "k must be at least 1");
  const int max_size = std::min(k, n_);
  std::vector<Agent> eligible;
  for (Agent i = 0; i < n_; ++i) {
    if (view.before[i] < cap_[i]) eligible.push_back(i);
  }
  std::vector<Agent> members;
  members.reserve(static_cast<std::size_t>(max_size));
  for (int size = 1; size <= max_size; ++size) {
    // Lexicographic combinations of eligible, mutually compatible agents.
    bool go_on = true;
    std::function<void(std::size_t, AgentMask, AgentMask)> grow =
        [&](std::size_t from, AgentMask s, AgentMask blocked) {
          const std::size_t need = static_cast<std::size_t>(size) - members.size();
          for (std::size_t idx = from; go_on && idx + need <= eligible.size(); ++idx) {
            const Agent a = eligible[idx];
            if ((blocked & bit(a)) != 0) continue;
            members.push_back(a);
            if (need == 1) {
              go_on = evaluate(view, s | bit(a), members, visit);
            } else {
              grow(idx + 1, s | bit(a), blocked | enemies_[a]);
            }
            members.pop_back();
          }
        };
    grow(0, 0, 0);
    if (!go_on) return false;
  }
  return true;
}

bool DefectionSearch::evaluate(const View& view, AgentMask s, const std::vector<Agent>& members,
                               const DefectionVisitor& visit) const {
  // Residual components adjacent to S.
  std::vector<AgentMask> comps;
  if (view.cliques) {
    for (Agent p : members) {
      const AgentMask rest = view.comp[p] & ~s;
      if (rest != 0 && std::find(comps.begin(), comps.end(), rest) == comps.end()) {
        comps.push_back(rest);
      }
    }
  } else {
    AgentMask frontier_all = 0;
    for (Agent p : members) frontier_all |= view.adj[p];
    frontier_all &= ~s;
    AgentMask seen = 0;
    for_each_bit(frontier_all, [&](Agent start) {
      if ((seen & bit(start)) != 0) return;
      AgentMask comp = bit(start);
      AgentMask frontier = comp;
      while (frontier != 0) {
        AgentMask next = 0;
        for_each_bit(frontier, [&](Agent x) { next |= view.adj[x]; });
        next &= ~s & ~comp;
        comp |= next;
        frontier = next;
      }
      seen |= comp;
      comps.push_back(comp);
    });
  }
  std::sort(comps.begin(), comps.end(), lowest_first);

  const std::size_t ps = members.size();
  std::vector<std::int64_t> base(ps, 0);
  for (std::size_t x = 0; x < ps; ++x) {
    for (std::size_t y = 0; y < ps; ++y) {
      if (x != y) base[x] += u(members[x], members[y]);
    }
  }
  // Weight of each usable component per participant; components that would
  // put a participant at -inf can never be part of an improving move.
  std::vector<AgentMask> usable;
  std::vector<std::vector<std::int64_t>> weight;
  for (AgentMask c : comps) {
    std::vector<std::int64_t> w(ps, 0);
    bool ok = true;
    for (std::size_t x = 0; x < ps && ok; ++x) {
      for_each_bit(c, [&](Agent j) { w[x] = add(w[x], u(members[x], j)); });
      ok = w[x] != kNeg;
    }
    if (ok) {
      usable.push_back(c);
      weight.push_back(std::move(w));
    }
  }
  for (std::size_t x = 0; x < ps; ++x) {
    std::int64_t best = base[x];
    for (const auto& w : weight) best += std::max<std::int64_t>(w[x], 0);
    if (best <= view.before[members[x]]) return true;
  }

  const std::size_t m = usable.size();
  std::vector<std::size_t> pick;
  std::vector<std::int64_t> after(ps);
  for (std::size_t r = 0; r <= m; ++r) {
    pick.resize(r);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      bool improving = true;
      for (std::size_t x = 0; x < ps; ++x) {
        std::int64_t total = base[x];
        for (std::size_t c : pick) total += weight[c][x];
        after[x] = total;
        if (total <= view.before[members[x]]) {
          improving = false;
          break;
        }
      }
      if (improving) {
        DefectionReport report;
        report.defection.participants = members;
        for (std::size_t c : pick) report.defection.attached.push_back(mask_members(usable[c]));
        for (std::size_t x = 0; x < ps; ++x) {
          report.before.push_back(from_raw(view.before[members[x]]));
          report.after.push_back(from_raw(after[x]));
        }
        if (!visit(report)) return false;
      }
      // Next combination in lexicographic order.
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == m - r + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

std::optional<DefectionReport> find_improving_defection(const Instance& inst,
                                                        const Network& net, int k) {
  return DefectionSearch(inst).first(net, k);
}

StabilityVerdict is_k_stable(const Instance& inst, const Network& net, int k) {
  StabilityVerdict verdict;
  verdict.witness = find_improving_defection(inst, net, k);
  verdict.stable = !verdict.witness.has_value();
  return verdict;
}

std::optional<DefectionReport> best_unilateral_deviation(const Instance& inst,
                                                         const Network& net, Agent i) {
  if (i < 0 || i >= inst.size()) throw Error(ErrorCode::kInvalid, "agent out of range");
  const Agent self[] = {i};
  const auto residual = residual_components(net, self);
  const auto adj = net.adjacency();
  const Utility before = node_utility(inst, net, i);
  Utility after = 0;
  Defection d;
  d.participants = {i};
  for (const auto& comp : residual) {
    const bool adjacent = std::any_of(comp.begin(), comp.end(), [&](Agent j) {
      return std::binary_search(adj[i].begin(), adj[i].end(), j);
    });
    if (!adjacent) continue;
    Utility marginal = 0;
    for (Agent j : comp) marginal += inst.u(i, j);
    if (marginal.is_finite() && marginal > Utility(0)) {
      after += marginal;
      d.attached.push_back(comp);
    }
  }
  if (!(after > before)) return std::nullopt;
  return DefectionReport{std::move(d), {before}, {after}};
}

PartitionConstraints stability_constraints(const Instance& inst, int k) {
  const int n = inst.size();
  PartitionConstraints c;
  c.conflicts.assign(static_cast<std::size_t>(n), 0);
  const ConflictGraph h = conflict_graph(inst);
  for (const Edge& e : h.edges()) {
    c.conflicts[e.a] |= bit(e.b);
    c.conflicts[e.b] |= bit(e.a);
  }
  c.partner.assign(static_cast<std::size_t>(n), -1);
  if (k < 2) return c;
  std::vector<std::int64_t> positive(static_cast<std::size_t>(n), 0);
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = 0; j < n; ++j) {
      const Utility x = inst.u(i, j);
      if (i != j && x.is_finite() && x.raw() > 0) positive[i] += x.raw();
    }
  }
  auto dominates = [&](Agent i, Agent j) {
    const Utility x = inst.u(i, j);
    return x.is_finite() && x.raw() > 0 && x.raw() > positive[i] - x.raw();
  };
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = i + 1; j < n; ++j) {
      if (dominates(i, j) && dominates(j, i)) {
        c.partner[i] = j;
        c.partner[j] = i;
      }
    }
  }
  return c;
}

void for_each_stable_partition(const Instance& inst, int k, const OracleOptions& options,
                               const std::function<bool(const CliquePartition&)>& visit) {
  if (inst.size() > options.oracle_bound) {
    throw Error(ErrorCode::kOracleBound,
                "instance has " + std::to_string(inst.size()) +
                    " agents, above the oracle bound of " +
                    std::to_string(options.oracle_bound));
  }
  const DefectionSearch search(inst);
  const auto constraints = stability_constraints(inst, k);
  for_each_partition(inst.size(), constraints, [&](const std::vector<AgentMask>& blocks) {
    if (!search.stable(blocks, k)) return true;
    return visit(partition_from_masks(inst.size(), blocks));
  });
}

std::optional<Network> exists_stable_network(const Instance& inst, int k,
                                             const OracleOptions& options,
                                             std::vector<ExaminedCandidate>* log) {
  if (log == nullptr) {
    std::optional<Network> found;
    for_each_stable_partition(inst, k, options, [&](const CliquePartition& p) {
      found = network_from_partition(p);
      return false;
    });
    return found;
  }
  if (inst.size() > options.oracle_bound) {
    throw Error(ErrorCode::kOracleBound, "instance above the oracle bound");
  }
  const DefectionSearch search(inst);
  std::optional<Network> found;
  for_each_partition(inst.size(), stability_constraints(inst, k),
                     [&](const std::vector<AgentMask>& blocks) {
                       auto witness = search.first(blocks, k);
                       auto partition = partition_from_masks(inst.size(), blocks);
                       const bool stable = !witness.has_value();
                       log->push_back({partition, std::move(witness)});
                       if (stable) found = network_from_partition(partition);
                       return !stable;
                     });
  return found;
}

}  // namespace gossip
