// Copyright 2026 The qrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qrc/experiments/runner.hpp"

int main(int argc, char** argv) {
  namespace ex = qrc::experiments;
  CLI::App app{"Quantum reservoir computing experiments"};
  app.set_version_flag("--version", ex::library_version());
  app.require_subcommand(1);

  std::string config;
  CLI::App* run = app.add_subcommand("run", "Run an experiment and write its CSV artifacts");
  run->add_option("config", config, "Experiment config (JSON)")->required();
  CLI::App* validate = app.add_subcommand("validate", "Check a config and print it with defaults filled in");
  validate->add_option("config", config, "Experiment config (JSON)")->required();
  app.add_subcommand("list-experiments", "List experiment kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ex::kExitUsage;
  }

  if (run->parsed()) return ex::run_command(config, std::cout, std::cerr);
  if (validate->parsed()) return ex::validate_command(config, std::cout, std::cerr);
  return ex::list_command(std::cout);
}
