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

#ifndef GOSSIPNET_CORE_CONSTRUCT_HPP
#define GOSSIPNET_CORE_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "stability.hpp"

namespace gossip {

enum class PotentialKind { kSumSquares, kF3, kF4, kSumCubes, kGeneralUtility };

const char* potential_name(PotentialKind kind);

/// Recurrence-defined size potentials. Base cases 1, 3, 7 (and 17 for F4);
/// F3(i) = 2 F3(i-1) - F3(i-2) + 1 and
/// F4(i) = 3 F4(i-1) - 3 F4(i-2) + F4(i-3) + 1. Size 0 maps to 0.
std::int64_t f3(int size);
std::int64_t f4(int size);
/// (n + 4)(n - 1) / 2
std::int64_t f3_closed(int n);
/// 17(n - 3) + (n - 5)(n - 4)(n - 3) / 6 + 7(n - 5)(n - 4) / 2
std::int64_t f4_closed(int n);

/// Sum of block_size^power.
std::int64_t power_sum(const std::vector<int>& sizes, int power);

/// Potential of a network, evaluated on its components. kGeneralUtility is
/// the sum of all node utilities and may be -inf.
Utility potential(PotentialKind kind, const Instance& inst, const Network& net);

struct Move {
  std::string label;
  std::optional<Defection> defection;
};

/// states[t + 1] results from moves[t]; potentials align with states.
struct Trajectory {
  PotentialKind potential = PotentialKind::kSumSquares;
  std::vector<Network> states;
  std::vector<Move> moves;
  std::vector<Utility> potentials;
  bool cycle = false;
  /// Index of the earlier state that the final state repeats, when cycling.
  int cycle_start = -1;

  const Network& final_state() const { return states.back(); }
};

/// Blocks of the peeling in formation order: each block is the
/// lexicographically smallest maximum independent set of the conflict graph
/// restricted to agents not yet placed.
std::vector<std::vector<Agent>> peel_blocks(const Instance& inst, const OracleOptions& options = {});

/// Disjoint cliques on the peeling blocks. Requires symmetric {-inf, 1}.
Network greedy_mis_peeling(const Instance& inst, const OracleOptions& options = {});

/// From all singletons, repeatedly moves the smallest agent j that has a
/// conflict-free clique at least as large as its own into the largest such
/// clique (first in canonical order on ties).
Trajectory two_stable_dynamics(const Instance& inst);

/// From all singletons, applies the first improving defection with at most
/// k participants (k in {3, 4}) until none remains. Sum of F_k over block
/// sizes must rise with every step.
Trajectory potential_dynamics(const Instance& inst, int k);

struct PotentialCounterexample {
  std::int64_t sixth_power_before = 0;
  std::int64_t sixth_power_after = 0;
  /// Minimal integer additive potential for 5-defections, index 1..15.
  std::vector<std::int64_t> minimal_potential;
  bool decreased = false;
  bool chain_bounds_hold = false;
  bool exponential_bound_holds = false;
};

/// Evaluates the sixth-power counterexample and the minimal additive
/// potential chain for defections by five agents.
PotentialCounterexample potential_counterexample_check();

/// Starting from a welfare-optimal clique partition, applies improving
/// defections of at most 3 agents until 3-stable. Sum of cubes must rise
/// and welfare must stay at the optimum; a rise above the claimed optimum
/// throws ErrorCode::kNotOptimal.
Trajectory three_stable_from_optimal(const Instance& inst, const CliquePartition& optimal);

/// Best-response dynamics on literal networks. With a schedule, each move
/// is validated as strictly improving for every participant (throws
/// ErrorCode::kNotImproving otherwise). Without one, each step applies the
/// improving defection of at most two agents with the largest total gain,
/// escaping -inf counting above any finite gain, first in search order on
/// ties. Stops at a stable network, at max_steps, or when a state repeats.
Trajectory best_response_run(const Instance& inst, const Network& start,
                             const std::optional<std::vector<Defection>>& schedule,
                             int max_steps);

/// Strict preference lists: men[m] lists women best first, women[w] lists men.
struct Preferences {
  std::vector<std::vector<int>> men;
  std::vector<std::vector<int>> women;

  int size() const { return static_cast<int>(men.size()); }
  /// Throws ErrorCode::kInvalid unless both sides hold n permutations of 0..n-1.
  void validate() const;
};

/// Man-proposing deferred acceptance; returns the wife of each man.
std::vector<int> gale_shapley(const Preferences& prefs);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_CONSTRUCT_HPP
