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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using c2pencil::cli::JobConfig;
  JobConfig cfg;
  CLI::App app{"Automorphisms of (2,2)-complete intersections in characteristic 2"};
  app.require_subcommand(1);

  std::optional<std::string> field, json_out, matrix;
  std::optional<std::size_t> random_m;
  auto add_common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) {
      sub->add_option("input", cfg.input, "Pencil JSON: file path, inline '{...}', or '-' for stdin");
      sub->add_option("--random", random_m, "Sample a random normal form with this M instead of reading input");
      sub->add_flag("--disguise", cfg.disguise, "Hide the sampled normal form behind random coordinates");
    }
    sub->add_option("--field", field, "Field spec F2^m/0x<modulus>, overriding the input");
    sub->add_flag("--allow-extend", cfg.allow_extend, "Extend the field when roots are missing");
    sub->add_option("--budget", cfg.budget, "Enumeration budget for oracle and truncated counts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for sampling");
    sub->add_option("--json-out", json_out, "Write the report here instead of stdout");
  };
  for (const auto& name : c2pencil::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, name != "selfcheck");
    if (name == "liftcheck") sub->add_option("--matrix", matrix, "2x2 element as 'a,b;c,d' hex literals");
    if (name == "aut") {
      sub->add_option("--truncate", cfg.truncate, "Truncation orders n for infinitesimal point counts");
      sub->add_option("--truncate-degree", cfg.truncate_degree, "Coefficient subfield degree for --truncate");
    }
    if (name == "selfcheck") sub->add_flag("--inject-fault", cfg.inject_fault, "Check a corrupted modulus too");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.field = field;
  cfg.json_out = json_out;
  cfg.matrix = matrix;
  cfg.random_m = random_m;

  const auto result = c2pencil::cli::run_command(cfg);
  const std::string text = result.report.dump(2) + "\n";
  if (cfg.json_out) {
    std::ofstream out(*cfg.json_out);
    if (!out) {
      std::cerr << "cannot write " << *cfg.json_out << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (result.report.contains("error")) std::cerr << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
