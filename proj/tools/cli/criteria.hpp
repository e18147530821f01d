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

/**
 * @file criteria.hpp
 * @brief The acceptance checks, shared by `c2pencil selfcheck` and the
 * acceptance test binary. Every check is deterministic given the seed.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "c2pencil/gf2m.hpp"

namespace c2pencil::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

const std::vector<Criterion>& acceptance_criteria();

/// Runs one check, timing it and turning exceptions into failures.
CriterionResult run_criterion(const Criterion& c, std::uint64_t seed);

/// Closure, inverses, distributivity and zero divisors of the arithmetic
/// defined by `field` (exhaustive for m <= 5, sampled otherwise).
CriterionResult check_field_axioms(const FieldSpec& field, std::uint64_t seed);

}  // namespace c2pencil::cli
