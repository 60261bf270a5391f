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

#ifndef GOSSIPNET_CORE_WELFARE_HPP
#define GOSSIPNET_CORE_WELFARE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "instance.hpp"
#include "stability.hpp"

namespace gossip {

enum class Metric { kTotalUtility, kComponentCount };

const char* metric_name(Metric metric);

/// A price ratio: an exact rational, or unbounded when the denominator is 0.
struct Ratio {
  bool unbounded = false;
  Rational value{1, 1};

  /// a / b, with 0 / 0 read as 1.
  static Ratio of(std::int64_t a, std::int64_t b);
  std::string to_string() const { return unbounded ? "unbounded" : value.to_string(); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct OptimumResult {
  Welfare value;
  CliquePartition witness;
};

/// Maximum total welfare over all partitions into conflict-free blocks,
/// with the first maximizer in canonical order as witness.
OptimumResult optimal_total_welfare(const Instance& inst, const OracleOptions& options = {});

/// Every welfare-maximizing clique partition, in canonical order.
std::vector<CliquePartition> optimal_partitions(const Instance& inst,
                                                const OracleOptions& options = {});

/// Fewest conflict-free blocks over all partitions, by exhaustive enumeration.
int min_conflict_free_blocks(const Instance& inst, const OracleOptions& options = {});

/// All k-stable clique partitions in canonical order.
std::vector<CliquePartition> enumerate_stable_networks(const Instance& inst, int k,
                                                       const OracleOptions& options = {});

/// A metric value with its witness. For kTotalUtility the value is welfare
/// in half units; for kComponentCount it is the number of blocks.
struct Scored {
  std::int64_t value = 0;
  CliquePartition witness;
};

struct WelfareReport {
  Metric metric = Metric::kTotalUtility;
  int k = 2;
  /// For kComponentCount the baseline is the chromatic number of the
  /// conflict graph, witnessed by its color classes.
  Scored optimum;
  std::size_t stable_count = 0;
  /// Empty when no k-stable network exists.
  std::optional<Scored> best_stable;
  std::optional<Scored> worst_stable;
  std::optional<Ratio> pos;
  std::optional<Ratio> poa;

  bool nonexistent() const { return !best_stable.has_value(); }
  /// Metric value rendered in its units ("10", "10.5", "4").
  std::string format(std::int64_t value) const;
};

WelfareReport welfare_report(const Instance& inst, int k, Metric metric,
                             const OracleOptions& options = {});

/// Blocks of a coloring, as a clique partition.
CliquePartition color_classes(const Coloring& coloring);

struct PoaBoundCheck {
  WelfareReport report;
  Rational bound;
  /// The measured total-welfare price of anarchy is at least `bound`.
  bool holds = false;
};

/// Measures the total-welfare price of anarchy and compares it to `bound`.
PoaBoundCheck poa_bound_check(const Instance& inst, int k, const Rational& bound,
                              const OracleOptions& options = {});

/// Lower bound for gen_two_cliques_matching(n) at k = 2: n / 2.
Rational two_cliques_poa_bound(int n);
/// Columns against rows of gen_grid(r, c): (c - 1) / (r - 1).
Rational grid_poa_bound(int rows, int cols);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_WELFARE_HPP
