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
#include <functional>
#include <span>
#include <vector>

#include "qrc/quantum/state.hpp"
#include "qrc/regression/linear.hpp"

namespace qrc::reservoir {

enum class InitialState { MaximallyMixed, Zero };

struct ReservoirConfig {
  int n_qubits = 5;
  double j_min = -0.5;
  double j_max = 0.5;
  double h = 1.0;
  double tau = 4.0;
  int v_nodes = 10;
  int input_qubit = 0;
  std::uint64_t seed = 0;
  std::size_t washout = 1000;
  bool bias = true;
  InitialState initial = InitialState::MaximallyMixed;

  // Throws InvalidArgument naming the offending field.
  void validate() const;
};

// Fully connected transverse-field Ising reservoir with precomputed
// sub-interval propagators U_{(v/V) tau}, v = 1..V.
class Reservoir {
 public:
  explicit Reservoir(const ReservoirConfig& cfg);

  const ReservoirConfig& config() const { return cfg_; }
  int n_qubits() const { return cfg_.n_qubits; }
  int v_nodes() const { return cfg_.v_nodes; }
  const quantum::RMatrix& couplings() const { return couplings_; }
  const quantum::Observable& hamiltonian() const { return hamiltonian_; }
  // fractions()[v - 1] = U_{(v/V) tau}; the last entry is U_tau.
  const std::vector<quantum::Unitary>& fractions() const { return fractions_; }

  // N * V true-node signals per step.
  int signal_count() const { return cfg_.n_qubits * cfg_.v_nodes; }
  // Signal columns plus the bias column when enabled.
  int feature_count() const { return signal_count() + (cfg_.bias ? 1 : 0); }

  // Column of <Z_l> at virtual node v (1-based): qubit-major, virtual-minor.
  static int signal_index(int l, int v, int v_nodes) { return l * v_nodes + (v - 1); }

 private:
  ReservoirConfig cfg_;
  quantum::RMatrix couplings_;
  quantum::Observable hamiltonian_;
  std::vector<quantum::Unitary> fractions_;
};

// Same as the Reservoir constructor.
Reservoir build_reservoir(const ReservoirConfig& cfg);

// J_ij, i < j, drawn in row-major pair order from uniform [j_min, j_max).
quantum::RMatrix draw_couplings(const ReservoirConfig& cfg);

// Tr_q[rho] with qubit q replaced by (I + (2x - 1) Z) / 2 = diag(x, 1 - x).
quantum::DensityMatrix inject_input(const quantum::DensityMatrix& rho, double x, int input_qubit);

struct ReservoirState {
  quantum::DensityMatrix rho;
  long step_index = 0;
};

ReservoirState initial_state(const ReservoirConfig& cfg);

// Injects x, records <Z_l> after each U_{(v/V) tau} and leaves the state at
// U_tau rho' U_tau^dagger. Writes signal_count() values into `signals`.
void step_multiplexed(ReservoirState& state, double x, const Reservoir& reservoir, std::span<double> signals);
std::vector<double> step_multiplexed(ReservoirState& state, double x, const Reservoir& reservoir);

using StepObserver = std::function<void(long step, const quantum::DensityMatrix& rho)>;

// Row k holds the signals produced by input x_k, plus the bias column when
// the config enables it. The observer, when set, sees the state after every
// step.
regression::Matrix run_teacher_forced(std::span<const double> inputs, const Reservoir& reservoir,
                                      ReservoirState& state, const StepObserver& observer = {});

// Least-squares readout on the rows after `washout`. Throws InvalidArgument
// when washout leaves no rows.
regression::ReadoutWeights train_readout(const regression::Matrix& signals, std::span<const double> targets,
                                          std::size_t washout);

inline constexpr double kDivergenceLow = -0.5;
inline constexpr double kDivergenceHigh = 1.5;

struct AutonomousRun {
  std::vector<double> inputs;   // x fed at each step
  std::vector<double> outputs;  // raw readout y at each step, before clamping
  std::vector<bool> clamped;    // y had to be clamped into [0, 1] to feed back
  bool diverged = false;        // stopped because y left [-0.5, 1.5]
  long diverged_at = -1;
};

// Closed loop: x_{k+1} = clamp(y_k, 0, 1). Stops early with `diverged` set
// when y leaves [-0.5, 1.5]; throws DivergenceError on a non-finite y.
AutonomousRun run_autonomous(const Reservoir& reservoir, const regression::ReadoutWeights& weights,
                             ReservoirState& state, double first_input, std::size_t steps);

}  // namespace qrc::reservoir
