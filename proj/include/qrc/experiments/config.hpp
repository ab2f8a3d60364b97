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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qrc/errors.hpp"
#include "qrc/qelm/qelm.hpp"
#include "qrc/reservoir/capacity.hpp"
#include "qrc/reservoir/emulation.hpp"
#include "qrc/reservoir/reservoir.hpp"

namespace qrc::experiments {

enum class ExperimentKind { QelmClassify, QelmSurface, QclFit, QrcEmulate, QrcCapacity };

std::span<const ExperimentKind> all_experiment_kinds();
std::string_view kind_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_kind(std::string_view name);

// Invalid configuration. key() is the dotted path of the offending entry,
// e.g. "reservoir.tau".
class ConfigError : public InvalidArgument {
 public:
  ConfigError(std::string key, const std::string& why)
      : InvalidArgument(key + ": " + why), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct QelmConfig {
  int n_qubits = 8;
  qelm::AngleRule encoding = qelm::AngleRule::Linear;
  int sweeps = qelm::RandomCircuit::kDefaultSweeps;
  // classification
  std::size_t train = 1000;
  std::size_t test = 1000;
  int repeats = 5;
  // response surface
  int grid = 41;
  int qubit = 0;
};

struct QclConfig {
  int n_qubits = 3;
  int layers = 3;
  std::size_t points = 20;
  double alpha = 0.02;
  int iters = 500;
  double eps = 1.5707963267948966;
};

enum class ChaoticSystem { Henon, Lorenz, MackeyGlass, Rossler };

struct EmulateConfig {
  ChaoticSystem system = ChaoticSystem::Henon;
  std::size_t train = 10000;
  std::size_t test = 1000;
  std::size_t autonomous = 2000;
  double dt = 0.02;
  // Discarded integration steps, or map iterates for Henon.
  std::size_t transient = 5000;
  std::size_t sample_every = 1;
  int phase_delay = 1;
  // Henon (x_0, x_{-1}); off-attractor values escape and abort the run.
  double henon_x0 = 0.0;
  double henon_x_prev = 0.0;
};

struct CapacityConfig {
  reservoir::CapacityTask task = reservoir::CapacityTask::Stm;
  reservoir::InputKind input = reservoir::InputKind::Uniform;
  std::size_t train = 3000;
  std::size_t test = 1000;
  int max_delay = 20;
  bool baselines = true;
  int esn_nodes = 100;
  double esn_spectral_radius = 0.95;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::QelmClassify;
  std::uint64_t seed = 0;
  std::string output_dir;
  QelmConfig qelm;
  QclConfig qcl;
  // seed is not read from the file; it comes from the global seed.
  reservoir::ReservoirConfig reservoir;
  EmulateConfig emulate;
  CapacityConfig capacity;
};

// JSON text -> validated config. Throws ConfigError.
ExperimentConfig parse_config(std::string_view json_text);
// Throws ConfigError for unreadable files as well, keyed by the path.
ExperimentConfig load_config(const std::filesystem::path& path);

// Pretty-printed JSON of every field the experiment reads, defaults filled
// in. Parsing the echo gives back the same config.
std::string echo_config(const ExperimentConfig& cfg);

}  // namespace qrc::experiments
