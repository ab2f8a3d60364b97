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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qrc/dynamics/systems.hpp"
#include "qrc/experiments/config.hpp"

namespace qrc::experiments {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidConfig = 2,
  kExitDivergence = 3,
  kExitIo = 4,
};

// Environment variable naming the directory that relative output_dir
// values are resolved against. Defaults to the working directory.
inline constexpr const char* kOutputRootEnv = "QRC_OUTPUT_ROOT";

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg);

struct RunSummary {
  std::filesystem::path output_dir;
  std::vector<std::string> files;  // CSVs written, in order; manifest.json last
  std::vector<std::pair<std::string, double>> metrics;

  double metric(const std::string& name) const;
};

// Runs the experiment and writes its CSVs plus manifest.json into out_dir,
// creating it if needed. Throws ConfigError, DivergenceError or IoError.
RunSummary run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

// Raw (unnormalized) series for an emulation config with `length` samples
// after the transient.
dynamics::TimeSeries generate_series(const EmulateConfig& cfg, std::size_t length);

// CLI helpers: report errors on `err` as one JSON object per line and map
// them to exit codes.
int run_command(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err);
int validate_command(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err);
int list_command(std::ostream& out);

std::string library_version();

}  // namespace qrc::experiments
