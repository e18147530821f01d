/*
 * Copyright 2026 The c2pencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Prints one line per acceptance criterion; exits nonzero if any fails or
// runs past its time limit. Usage: acceptance [--seed N] [id ...]

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>

#include "cli/criteria.hpp"

int main(int argc, char** argv) {
  using namespace c2pencil::cli;
  std::uint64_t seed = kDefaultSeed;
  std::set<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      ids.insert(std::stoi(arg));
    }
  }
  bool all_ok = true;
  for (const auto& c : acceptance_criteria()) {
    if (!ids.empty() && !ids.count(c.id)) continue;
    const CriterionResult r = run_criterion(c, seed);
    const bool in_time = r.seconds <= r.limit_seconds;
    const bool ok = r.passed && in_time;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s, limit " << r.limit_seconds << " s)";
    if (!in_time) std::cout << " over time limit;";
    if (!r.detail.empty()) std::cout << " " << r.detail;
    std::cout << std::endl;
  }
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
