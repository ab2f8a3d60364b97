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

#include "qrc/reservoir/emulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrc/errors.hpp"

namespace qrc::reservoir {

std::size_t EmulationProtocol::required_length() const {
  return teacher_length() + std::max(test, autonomous) + 1;
}

void EmulationProtocol::validate() const {
  if (train == 0) throw InvalidArgument("emulation: train must be positive");
  if (autonomous == 0) throw InvalidArgument("emulation: autonomous must be positive");
  if (error_window == 0) throw InvalidArgument("emulation: error_window must be positive");
}

EmulationResult emulate(const Reservoir& reservoir, std::span<const double> series, const EmulationProtocol& p) {
  p.validate();
  if (series.size() < p.required_length())
    throw InvalidArgument("emulation: series has " + std::to_string(series.size()) + " values, need " +
                          std::to_string(p.required_length()));
  const std::size_t n = p.teacher_length();
  EmulationResult out;

  ReservoirState state = initial_state(reservoir.config());
  const regression::Matrix signals = run_teacher_forced(series.first(n), reservoir, state);
  const std::span<const double> targets = series.subspan(1, n);
  out.readout = train_readout(signals, targets, p.washout);
  const regression::Vector pred = out.readout.predict(signals);
  out.teacher_predictions.assign(pred.data(), pred.data() + pred.size());
  const regression::Vector y_train = Eigen::Map<const regression::Vector>(targets.data() + p.washout, p.train);
  out.train_nmse = regression::nmse(pred.tail(p.train), y_train);

  if (p.test > 0) {
    ReservoirState fork = state;
    const regression::Matrix test_signals = run_teacher_forced(series.subspan(n, p.test), reservoir, fork);
    const regression::Vector y_test = Eigen::Map<const regression::Vector>(series.data() + n + 1, p.test);
    out.test_nmse = regression::nmse(out.readout.predict(test_signals), y_test);
  }

  ReservoirState loop = state;
  out.closed_loop = run_autonomous(reservoir, out.readout, loop, std::clamp(pred[pred.size() - 1], 0.0, 1.0),
                                   p.autonomous);
  const AutonomousRun& run = out.closed_loop;
  out.bounded_steps = run.diverged ? static_cast<std::size_t>(run.diverged_at) : run.outputs.size();

  const std::size_t w = std::min(p.error_window, p.autonomous);
  if (out.bounded_steps < w) {
    out.closed_loop_nrmse = std::numeric_limits<double>::infinity();
  } else {
    const std::span<const double> truth = series.subspan(n + 1, w);
    const regression::Vector t = Eigen::Map<const regression::Vector>(truth.data(), static_cast<Eigen::Index>(w));
    const regression::Vector y = Eigen::Map<const regression::Vector>(run.outputs.data(), static_cast<Eigen::Index>(w));
    const double var = regression::variance(t);
    out.closed_loop_nrmse = var > 0 ? std::sqrt(regression::mse(y, t) / var) : std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace qrc::reservoir
