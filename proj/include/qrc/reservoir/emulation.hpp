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

#include <span>
#include <vector>

#include "qrc/regression/linear.hpp"
#include "qrc/reservoir/reservoir.hpp"

namespace qrc::reservoir {

// Next-step emulation of a series already normalized into [0, 1].
// Steps [0, washout) warm the reservoir up, [washout, washout + train) fit
// the readout on x_{k+1}; afterwards the reservoir is forked into a
// teacher-forced test of `test` steps and a closed loop of `autonomous`
// steps, both starting from the state at the end of training.
struct EmulationProtocol {
  std::size_t washout = 1000;
  std::size_t train = 10000;
  std::size_t test = 1000;
  std::size_t autonomous = 2000;
  // Window for the closed-loop error against ground truth.
  std::size_t error_window = 50;

  std::size_t teacher_length() const { return washout + train; }
  // Series values needed, including the final target.
  std::size_t required_length() const;
  void validate() const;
};

struct EmulationResult {
  regression::ReadoutWeights readout;
  std::vector<double> teacher_predictions;  // one per teacher step
  double train_nmse = 0.0;
  double test_nmse = 0.0;
  AutonomousRun closed_loop;
  // Steps completed before the output left the admissible range.
  std::size_t bounded_steps = 0;
  // RMSE over the first error_window closed-loop outputs divided by the
  // standard deviation of the true values there; +inf when the loop stopped
  // earlier.
  double closed_loop_nrmse = 0.0;
};

EmulationResult emulate(const Reservoir& reservoir, std::span<const double> series, const EmulationProtocol& p);

}  // namespace qrc::reservoir
