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

#include "construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "error.hpp"
#include "independent_set.hpp"
#include "partitions.hpp"

namespace gossip {

const char* potential_name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::kSumSquares: return "sum_squares";
    case PotentialKind::kF3: return "f3";
    case PotentialKind::kF4: return "f4";
    case PotentialKind::kSumCubes: return "sum_cubes";
    case PotentialKind::kGeneralUtility: return "general_utility";
  }
  return "unknown";
}

std::int64_t f3(int size) {
  static const std::vector<std::int64_t> table = [] {
    std::vector<std::int64_t> t{0, 1, 3, 7};
    for (int i = 4; i <= kMaxMaskAgents * 2; ++i) t.push_back(2 * t[i - 1] - t[i - 2] + 1);
    return t;
  }();
  if (size < 0 || size >= static_cast<int>(table.size())) {
    throw Error(ErrorCode::kInvalid, "f3 size out of range");
  }
  return table[size];
}

std::int64_t f4(int size) {
  static const std::vector<std::int64_t> table = [] {
    std::vector<std::int64_t> t{0, 1, 3, 7, 17};
    for (int i = 5; i <= kMaxMaskAgents * 2; ++i) {
      t.push_back(3 * t[i - 1] - 3 * t[i - 2] + t[i - 3] + 1);
    }
    return t;
  }();
  if (size < 0 || size >= static_cast<int>(table.size())) {
    throw Error(ErrorCode::kInvalid, "f4 size out of range");
  }
  return table[size];
}

std::int64_t f3_closed(int n) {
  const std::int64_t x = n;
  return (x + 4) * (x - 1) / 2;
}

std::int64_t f4_closed(int n) {
  const std::int64_t x = n;
  return 17 * (x - 3) + (x - 5) * (x - 4) * (x - 3) / 6 + 7 * (x - 5) * (x - 4) / 2;
}

std::int64_t power_sum(const std::vector<int>& sizes, int power) {
  std::int64_t total = 0;
  for (int s : sizes) {
    std::int64_t term = 1;
    for (int p = 0; p < power; ++p) term *= s;
    total += term;
  }
  return total;
}

Utility potential(PotentialKind kind, const Instance& inst, const Network& net) {
  const CliquePartition parts = components(net);
  const auto sizes = parts.block_sizes();
  std::int64_t total = 0;
  switch (kind) {
    case PotentialKind::kSumSquares: return power_sum(sizes, 2);
    case PotentialKind::kSumCubes: return power_sum(sizes, 3);
    case PotentialKind::kF3:
      for (int s : sizes) total += f3(s);
      return total;
    case PotentialKind::kF4:
      for (int s : sizes) total += f4(s);
      return total;
    case PotentialKind::kGeneralUtility: {
      Utility sum = 0;
      for (Utility u : node_utilities(inst, parts)) sum += u;
      return sum;
    }
  }
  return 0;
}

std::vector<std::vector<Agent>> peel_blocks(const Instance& inst, const OracleOptions& options) {
  require_friends_enemies(inst, "MIS peeling");
  const ConflictGraph h = conflict_graph(inst);
  std::vector<Agent> rest(static_cast<std::size_t>(inst.size()));
  std::iota(rest.begin(), rest.end(), 0);
  std::vector<std::vector<Agent>> blocks;
  while (!rest.empty()) {
    auto block = max_independent_set(h, rest, options.mis_bound);
    std::vector<Agent> next;
    std::set_difference(rest.begin(), rest.end(), block.begin(), block.end(),
                        std::back_inserter(next));
    rest = std::move(next);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Network greedy_mis_peeling(const Instance& inst, const OracleOptions& options) {
  return network_from_partition(CliquePartition(inst.size(), peel_blocks(inst, options)));
}

namespace {

std::string block_label(const std::vector<Agent>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    out += (i ? "," : "") + std::to_string(block[i]);
  }
  return out + "}";
}

std::int64_t sum_squares(const std::vector<std::vector<Agent>>& blocks) {
  std::int64_t total = 0;
  for (const auto& b : blocks) total += static_cast<std::int64_t>(b.size() * b.size());
  return total;
}

}  // namespace

Trajectory two_stable_dynamics(const Instance& inst) {
  require_friends_enemies(inst, "two-stable dynamics");
  const int n = inst.size();
  const ConflictGraph h = conflict_graph(inst);
  std::vector<std::vector<Agent>> blocks = CliquePartition::singletons(n).blocks();
  Trajectory t;
  t.potential = PotentialKind::kSumSquares;
  t.states.push_back(network_from_partition(CliquePartition(n, blocks)));
  t.potentials.push_back(sum_squares(blocks));
  const auto free_of = [&](Agent j, const std::vector<Agent>& block) {
    return std::none_of(block.begin(), block.end(), [&](Agent i) { return h.has_edge(i, j); });
  };
  while (true) {
    std::vector<int> owner(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Agent a : blocks[b]) owner[a] = static_cast<int>(b);
    }
    int mover = -1;
    int target = -1;
    for (Agent j = 0; j < n && mover < 0; ++j) {
      const std::size_t own = blocks[owner[j]].size();
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (static_cast<int>(b) == owner[j] || blocks[b].size() < own) continue;
        if (!free_of(j, blocks[b])) continue;
        if (target < 0 || blocks[b].size() > blocks[target].size()) {
          mover = j;
          target = static_cast<int>(b);
        }
      }
    }
    if (mover < 0) break;
    const std::string label = "agent " + std::to_string(mover) + ": " +
                              block_label(blocks[owner[mover]]) + " -> " +
                              block_label(blocks[target]);
    auto& from = blocks[owner[mover]];
    from.erase(std::find(from.begin(), from.end(), mover));
    auto& into = blocks[target];
    into.insert(std::lower_bound(into.begin(), into.end(), mover), mover);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b) { return b.empty(); }),
                 blocks.end());
    const CliquePartition next(n, blocks);
    blocks = next.blocks();
    const std::int64_t pot = sum_squares(blocks);
    if (pot < t.potentials.back().value() + 2) {
      throw Error(ErrorCode::kInternal, "sum of squares rose by less than 2");
    }
    t.moves.push_back({label, std::nullopt});
    t.states.push_back(network_from_partition(next));
    t.potentials.push_back(pot);
  }
  return t;
}

namespace {

// Shared driver for the clique-partition defection dynamics.
Trajectory defect_until_stable(const Instance& inst, Network start, int k, PotentialKind kind,
                               std::int64_t step_limit, bool keep_welfare) {
  const DefectionSearch search(inst);
  Trajectory t;
  t.potential = kind;
  t.states.push_back(start);
  t.potentials.push_back(potential(kind, inst, start));
  const Welfare claimed = total_welfare(inst, start);
  Network net = std::move(start);
  for (std::int64_t step = 0;; ++step) {
    if (step > step_limit) throw Error(ErrorCode::kInternal, "dynamics exceeded its step bound");
    auto found = search.first(partition_masks(components(net)), k);
    if (!found) break;
    Network next = cliqueify(apply_defection(net, found->defection));
    const Utility pot = potential(kind, inst, next);
    if (!(pot > t.potentials.back())) {
      throw Error(ErrorCode::kInternal, std::string(potential_name(kind)) +
                                            " potential did not increase at step " +
                                            std::to_string(step));
    }
    if (keep_welfare) {
      const Welfare w = total_welfare(inst, next);
      if (w > claimed) {
        throw Error(ErrorCode::kNotOptimal,
                    "repair step raised welfare above the supplied optimum (" +
                        claimed.to_string() + " -> " + w.to_string() + ")");
      }
      if (w < claimed) {
        throw Error(ErrorCode::kInternal, "repair step lowered welfare (" +
                                              claimed.to_string() + " -> " + w.to_string() +
                                              ")");
      }
    }
    std::string label = "S=" + block_label(found->defection.participants);
    for (const auto& c : found->defection.attached) label += " +" + block_label(c);
    t.moves.push_back({std::move(label), found->defection});
    t.states.push_back(next);
    t.potentials.push_back(pot);
    net = std::move(next);
  }
  return t;
}

}  // namespace

Trajectory potential_dynamics(const Instance& inst, int k) {
  if (k != 3 && k != 4) throw Error(ErrorCode::kInvalid, "potential dynamics needs k in {3, 4}");
  require_friends_enemies(inst, "potential dynamics");
  const int n = inst.size();
  const PotentialKind kind = k == 3 ? PotentialKind::kF3 : PotentialKind::kF4;
  const std::int64_t limit = static_cast<std::int64_t>(n) * (k == 3 ? f3(n) : f4(n)) + 1;
  return defect_until_stable(inst, Network(n), k, kind, limit, false);
}

PotentialCounterexample potential_counterexample_check() {
  PotentialCounterexample r;
  r.sixth_power_before = power_sum({5, 5, 5, 5, 5, 1}, 6);
  r.sixth_power_after = power_sum({4, 4, 4, 4, 4, 6}, 6);
  r.decreased = r.sixth_power_after < r.sixth_power_before;
  // F(0) = 0, F(1) = 1. For i <= 5: i agents leaving blocks of size i - 1 to
  // form a new block need F(i) > i (F(i-1) - F(i-2)). Beyond that, four
  // agents leaving blocks of size i - 1 to join a block of size i - 4 need
  // F(i) > 4 (F(i-1) - F(i-2)) + F(i-4).
  std::vector<std::int64_t> f{0, 1};
  for (int i = 2; i <= 15; ++i) {
    std::int64_t need = i <= 5 ? i * (f[i - 1] - f[i - 2]) + 1
                               : 4 * (f[i - 1] - f[i - 2]) + f[i - 4] + 1;
    f.push_back(std::max(need, f[i - 1] + 1));
  }
  r.minimal_potential = f;
  r.chain_bounds_hold = f[2] >= 3 && f[3] >= 7 && f[4] >= 17 && f[5] >= 51;
  r.exponential_bound_holds = true;
  for (int i = 1; i <= 15; ++i) {
    r.exponential_bound_holds = r.exponential_bound_holds && f[i] >= (std::int64_t{1} << (i - 1));
  }
  return r;
}

Trajectory three_stable_from_optimal(const Instance& inst, const CliquePartition& optimal) {
  require_friends_enemies(inst, "three-stable repair");
  if (optimal.size() != inst.size()) {
    throw Error(ErrorCode::kInvalid, "partition and instance sizes differ");
  }
  const std::int64_t n = inst.size();
  return defect_until_stable(inst, network_from_partition(optimal), 3, PotentialKind::kSumCubes,
                             n * n * n + 1, true);
}

Trajectory best_response_run(const Instance& inst, const Network& start,
                             const std::optional<std::vector<Defection>>& schedule,
                             int max_steps) {
  if (start.size() != inst.size()) {
    throw Error(ErrorCode::kInvalid, "network and instance sizes differ");
  }
  const DefectionSearch search(inst);
  Trajectory t;
  t.potential = PotentialKind::kGeneralUtility;
  t.states.push_back(start);
  t.potentials.push_back(potential(PotentialKind::kGeneralUtility, inst, start));
  std::map<std::vector<Edge>, int> seen{{start.edges(), 0}};
  Network net = start;
  const int steps = schedule ? static_cast<int>(schedule->size()) : max_steps;
  for (int step = 0; step < steps; ++step) {
    Defection move;
    if (schedule) {
      move = (*schedule)[step];
      std::sort(move.participants.begin(), move.participants.end());
      const Network next = apply_defection(net, move);
      for (Agent p : move.participants) {
        const Utility before = node_utility(inst, net, p);
        const Utility after = node_utility(inst, next, p);
        if (!(after > before)) {
          throw Error(ErrorCode::kNotImproving,
                      "move " + std::to_string(step + 1) + ": participant " +
                          std::to_string(p) + " does not improve (" + before.to_string() +
                          " -> " + after.to_string() + ")");
        }
      }
    } else {
      std::optional<DefectionReport> best;
      std::pair<int, std::int64_t> best_key{-1, 0};
      search.for_each(net, 2, [&](const DefectionReport& r) {
        std::pair<int, std::int64_t> key{0, 0};
        for (std::size_t x = 0; x < r.before.size(); ++x) {
          if (r.before[x].is_neg_inf()) {
            ++key.first;
          } else {
            key.second += r.after[x].value() - r.before[x].value();
          }
        }
        if (!best || key > best_key) {
          best = r;
          best_key = key;
        }
        return true;
      });
      if (!best) break;
      move = best->defection;
    }
    Network next = apply_defection(net, move);
    std::string label = "S=" + block_label(move.participants);
    for (const auto& c : move.attached) label += " +" + block_label(c);
    t.moves.push_back({std::move(label), move});
    t.states.push_back(next);
    t.potentials.push_back(potential(PotentialKind::kGeneralUtility, inst, next));
    net = std::move(next);
    const auto [it, inserted] = seen.emplace(net.edges(), static_cast<int>(t.states.size()) - 1);
    if (!inserted && !t.cycle) {
      t.cycle = true;
      t.cycle_start = it->second;
      if (!schedule) break;
    }
  }
  return t;
}

void Preferences::validate() const {
  const int n = size();
  if (static_cast<int>(women.size()) != n) {
    throw Error(ErrorCode::kInvalid, "preference sides have different sizes");
  }
  const auto check = [n](const std::vector<std::vector<int>>& side, const char* who) {
    for (const auto& list : side) {
      std::vector<int> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expect(static_cast<std::size_t>(n));
      std::iota(expect.begin(), expect.end(), 0);
      if (sorted != expect) {
        throw Error(ErrorCode::kInvalid,
                    std::string(who) + " preference list is not a permutation of 0..n-1");
      }
    }
  };
  check(men, "men");
  check(women, "women");
}

std::vector<int> gale_shapley(const Preferences& prefs) {
  prefs.validate();
  const int n = prefs.size();
  std::vector<std::vector<int>> rank(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int w = 0; w < n; ++w) {
    for (int p = 0; p < n; ++p) rank[w][prefs.women[w][p]] = p;
  }
  std::vector<int> wife(static_cast<std::size_t>(n), -1);
  std::vector<int> husband(static_cast<std::size_t>(n), -1);
  std::vector<int> next(static_cast<std::size_t>(n), 0);
  std::vector<int> free_men(static_cast<std::size_t>(n));
  std::iota(free_men.rbegin(), free_men.rend(), 0);
  while (!free_men.empty()) {
    const int m = free_men.back();
    free_men.pop_back();
    const int w = prefs.men[m][next[m]++];
    const int current = husband[w];
    if (current < 0) {
      husband[w] = m;
      wife[m] = w;
    } else if (rank[w][m] < rank[w][current]) {
      husband[w] = m;
      wife[m] = w;
      wife[current] = -1;
      free_men.push_back(current);
    } else {
      free_men.push_back(m);
    }
  }
  return wife;
}

}  // namespace gossip
