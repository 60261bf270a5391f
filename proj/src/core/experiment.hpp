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

#ifndef GOSSIPNET_CORE_EXPERIMENT_HPP
#define GOSSIPNET_CORE_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"

namespace gossip {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Number of checks in the battery (ids 1..count).
int suite_size();
const std::string& criterion_title(int id);
/// Runs one check; errors inside the check are reported as a failure.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite();

std::string suite_markdown(const std::vector<CriterionResult>& results);
std::string suite_json(const std::vector<CriterionResult>& results);

/// Deterministic symmetric {-inf, 1} instances: instance t has
/// n = min_n + t mod (max_n - min_n + 1) agents and a density cycling
/// through 0.05 .. 0.95.
std::vector<Instance> random_corpus(int count, int min_n, int max_n, std::uint64_t seed);

/// One representative per isomorphism class of simple graphs on n nodes,
/// relabelled so degrees are non-increasing.
std::vector<Graph> graphs_up_to_isomorphism(int n);

}  // namespace gossip

#endif  // GOSSIPNET_CORE_EXPERIMENT_HPP
