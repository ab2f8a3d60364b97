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
#include <span>
#include <vector>

#include "qrc/regression/linear.hpp"
#include "qrc/reservoir/reservoir.hpp"

namespace qrc::reservoir {

enum class CapacityTask { Stm, Parity };
enum class InputKind { Binary, Uniform };

struct CapacityProtocol {
  std::size_t washout = 1000;
  std::size_t train = 3000;
  std::size_t test = 1000;
  int max_delay = 20;
  InputKind input = InputKind::Uniform;
  std::uint64_t input_seed = 0;

  std::size_t length() const { return washout + train + test; }
  void validate() const;
};

struct CapacityResult {
  std::vector<double> per_delay;  // index d = 0..max_delay
  double total = 0.0;
  // Delays whose test target had zero variance; their capacity is 0.
  std::vector<int> degenerate;
};

// Squared Pearson correlation; 0 when either side has zero variance.
double squared_correlation(std::span<const double> a, std::span<const double> b);

// i.i.d. inputs: uniform on [0, 1) or fair bits.
std::vector<double> capacity_inputs(const CapacityProtocol& p);

// STM: y_k = x_{k-d}. Parity: y_k = (sum_{i=0}^{d} x_{k-i}) mod 2 on 0/1
// inputs. Entries for k < d are 0 and always fall inside the washout.
std::vector<double> capacity_target(std::span<const double> inputs, CapacityTask task, int delay);

// Per delay: fit a readout on rows [washout, washout + train) of `features`
// and score the squared correlation on the following `test` rows.
CapacityResult capacity_from_features(const regression::Matrix& features, std::span<const double> inputs,
                                      CapacityTask task, const CapacityProtocol& p);

// Features [x_k, 1]: the memoryless linear baseline.
regression::Matrix memoryless_features(std::span<const double> inputs);

CapacityResult stm_parity_capacity(const Reservoir& reservoir, CapacityTask task, const CapacityProtocol& p);

}  // namespace qrc::reservoir
