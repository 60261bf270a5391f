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

// One pass/fail line per check; exits non-zero when any selected check fails.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "experiment.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) {
      ids.push_back(std::stoi(argv[++a]));
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]...\n");
      return 2;
    }
  }
  if (ids.empty()) {
    for (int id = 1; id <= gossip::suite_size(); ++id) ids.push_back(id);
  }
  int failed = 0;
  for (int id : ids) {
    const gossip::CriterionResult r = gossip::run_criterion(id);
    std::printf("criterion %2d %s: %s (%.2fs) %s\n", r.id, r.passed ? "PASS" : "FAIL",
                r.title.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
