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
 * @file commands.hpp
 * @brief Command dispatch for the c2pencil tool. Each command returns a
 * JSON report and an exit code; failures become {"error": {...}} reports.
 *
 * Exit codes: 0 ok, 2 parse or invalid input, 3 not smooth, 4 repeated
 * Pfaffian roots, 5 field too small, 6 budget exceeded, 7 verification
 * failure (including a failed self-check).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/io.hpp"

namespace c2pencil::cli {

struct JobConfig {
  std::string command;
  std::string input;  // path, inline JSON, "-" for stdin; empty with --random
  std::optional<std::string> field;
  bool allow_extend = false;
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 1;
  std::optional<std::string> json_out;
  std::optional<std::size_t> random_m;  // sample a normal form instead of reading input
  bool disguise = false;                // hide a sampled normal form behind random coordinates
  std::optional<std::string> matrix;    // liftcheck element, "a,b;c,d"
  std::vector<unsigned> truncate;       // truncation orders for aut
  unsigned truncate_degree = 0;         // coefficient subfield degree for aut
  bool inject_fault = false;            // selfcheck: corrupt the modulus under test
};

struct CommandResult {
  Json report;
  int exit_code = 0;
};

int exit_code_for(ErrorKind kind);

const std::vector<std::string>& command_names();

/// Never throws for library errors; they are folded into the report.
CommandResult run_command(const JobConfig& cfg);

}  // namespace c2pencil::cli
