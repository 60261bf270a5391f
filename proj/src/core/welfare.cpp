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

#include "welfare.hpp"

#include <algorithm>

#include "error.hpp"
#include "partitions.hpp"

namespace gossip {

const char* metric_name(Metric metric) {
  return metric == Metric::kTotalUtility ? "total_utility" : "component_count";
}

Ratio Ratio::of(std::int64_t a, std::int64_t b) {
  Ratio r;
  if (b == 0) {
    r.unbounded = a != 0;
    return r;
  }
  r.value = Rational(a, b);
  return r;
}

namespace {

void require_oracle_size(const Instance& inst, const OracleOptions& options) {
  if (inst.size() > options.oracle_bound) {
    throw Error(ErrorCode::kOracleBound,
                "instance has " + std::to_string(inst.size()) +
                    " agents, above the oracle bound of " + std::to_string(options.oracle_bound));
  }
  if (inst.size() > kMaxMaskAgents) {
    throw Error(ErrorCode::kOracleBound, "instance too large for partition enumeration");
  }
}

PartitionConstraints conflict_constraints(const Instance& inst) {
  PartitionConstraints c = stability_constraints(inst, 1);
  c.partner.clear();
  return c;
}

// Doubled welfare of conflict-free blocks, from a precomputed pair table.
class BlockWelfare {
 public:
  explicit BlockWelfare(const Instance& inst) : n_(inst.size()) {
    pair_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (Agent i = 0; i < n_; ++i) {
      for (Agent j = 0; j < n_; ++j) {
        const Utility x = inst.u(i, j);
        if (i != j && x.is_finite()) pair_[static_cast<std::size_t>(i * n_ + j)] = x.raw();
      }
    }
  }

  std::int64_t operator()(const std::vector<AgentMask>& blocks) const {
    std::int64_t total = 0;
    for (AgentMask b : blocks) {
      for_each_bit(b, [&](Agent i) {
        for_each_bit(b, [&](Agent j) { total += pair_[static_cast<std::size_t>(i * n_ + j)]; });
      });
    }
    return total;
  }

 private:
  int n_;
  std::vector<std::int64_t> pair_;
};

}  // namespace

OptimumResult optimal_total_welfare(const Instance& inst, const OracleOptions& options) {
  require_oracle_size(inst, options);
  const BlockWelfare welfare(inst);
  std::optional<std::int64_t> best;
  std::vector<AgentMask> witness;
  for_each_partition(inst.size(), conflict_constraints(inst),
                     [&](const std::vector<AgentMask>& blocks) {
                       const std::int64_t w = welfare(blocks);
                       if (!best || w > *best) {
                         best = w;
                         witness = blocks;
                       }
                       return true;
                     });
  return {Welfare{*best}, partition_from_masks(inst.size(), witness)};
}

std::vector<CliquePartition> optimal_partitions(const Instance& inst,
                                                const OracleOptions& options) {
  require_oracle_size(inst, options);
  const BlockWelfare welfare(inst);
  std::optional<std::int64_t> best;
  std::vector<std::vector<AgentMask>> found;
  for_each_partition(inst.size(), conflict_constraints(inst),
                     [&](const std::vector<AgentMask>& blocks) {
                       const std::int64_t w = welfare(blocks);
                       if (!best || w > *best) {
                         best = w;
                         found.clear();
                       }
                       if (w == *best) found.push_back(blocks);
                       return true;
                     });
  std::vector<CliquePartition> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(partition_from_masks(inst.size(), b));
  return out;
}

int min_conflict_free_blocks(const Instance& inst, const OracleOptions& options) {
  require_oracle_size(inst, options);
  int best = inst.size();
  for_each_partition(inst.size(), conflict_constraints(inst),
                     [&](const std::vector<AgentMask>& blocks) {
                       best = std::min(best, static_cast<int>(blocks.size()));
                       return true;
                     });
  return best;
}

std::vector<CliquePartition> enumerate_stable_networks(const Instance& inst, int k,
                                                       const OracleOptions& options) {
  std::vector<CliquePartition> out;
  for_each_stable_partition(inst, k, options, [&](const CliquePartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::string WelfareReport::format(std::int64_t value) const {
  return metric == Metric::kTotalUtility ? Welfare{value}.to_string() : std::to_string(value);
}

CliquePartition color_classes(const Coloring& coloring) {
  std::vector<std::vector<Agent>> blocks(static_cast<std::size_t>(coloring.colors));
  for (std::size_t v = 0; v < coloring.color.size(); ++v) {
    blocks[coloring.color[v]].push_back(static_cast<Agent>(v));
  }
  return CliquePartition(static_cast<int>(coloring.color.size()), std::move(blocks));
}

WelfareReport welfare_report(const Instance& inst, int k, Metric metric,
                             const OracleOptions& options) {
  require_oracle_size(inst, options);
  WelfareReport r;
  r.metric = metric;
  r.k = k;
  if (metric == Metric::kTotalUtility) {
    const OptimumResult opt = optimal_total_welfare(inst, options);
    r.optimum = {opt.value.doubled.value(), opt.witness};
  } else {
    const Coloring c = chromatic_number(conflict_graph(inst), options.coloring_bound);
    r.optimum = {c.colors, color_classes(c)};
  }
  const BlockWelfare welfare(inst);
  // Higher is better for utility, lower for components; keep both in one order.
  const auto score = [&](const CliquePartition& p) -> std::int64_t {
    return metric == Metric::kTotalUtility ? welfare(partition_masks(p))
                                           : static_cast<std::int64_t>(p.block_count());
  };
  const auto better = [&](std::int64_t a, std::int64_t b) {
    return metric == Metric::kTotalUtility ? a > b : a < b;
  };
  for_each_stable_partition(inst, k, options, [&](const CliquePartition& p) {
    ++r.stable_count;
    const std::int64_t s = score(p);
    if (!r.best_stable || better(s, r.best_stable->value)) r.best_stable = Scored{s, p};
    if (!r.worst_stable || better(r.worst_stable->value, s)) r.worst_stable = Scored{s, p};
    return true;
  });
  if (r.best_stable) {
    if (metric == Metric::kTotalUtility) {
      r.pos = Ratio::of(r.optimum.value, r.best_stable->value);
      r.poa = Ratio::of(r.optimum.value, r.worst_stable->value);
    } else {
      r.pos = Ratio::of(r.best_stable->value, r.optimum.value);
      r.poa = Ratio::of(r.worst_stable->value, r.optimum.value);
    }
  }
  return r;
}

PoaBoundCheck poa_bound_check(const Instance& inst, int k, const Rational& bound,
                              const OracleOptions& options) {
  PoaBoundCheck c;
  c.report = welfare_report(inst, k, Metric::kTotalUtility, options);
  c.bound = bound;
  c.holds = c.report.poa.has_value() && (c.report.poa->unbounded || c.report.poa->value >= bound);
  return c;
}

Rational two_cliques_poa_bound(int n) { return Rational(n, 2); }

Rational grid_poa_bound(int rows, int cols) { return Rational(cols - 1, rows - 1); }

}  // namespace gossip
