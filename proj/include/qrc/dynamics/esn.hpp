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

#include <Eigen/Dense>

#include "qrc/regression/linear.hpp"

namespace qrc::dynamics {

struct EsnConfig {
  int nodes = 100;
  double spectral_radius = 0.95;
  double input_scale = 1.0;
  std::uint64_t seed = 0;
};

// r(k+1) = tanh(W r(k) + W_in x_k). W is dense uniform on [-1, 1] rescaled
// to the configured spectral radius; W_in is uniform on
// [-input_scale, input_scale].
class EchoStateNetwork {
 public:
  explicit EchoStateNetwork(const EsnConfig& cfg);

  const EsnConfig& config() const { return cfg_; }
  const Eigen::MatrixXd& recurrent() const { return w_; }
  const Eigen::VectorXd& input_weights() const { return w_in_; }

  // Row k holds r(k+1), the state after consuming x_k, followed by a bias
  // column of ones. Starts from r = 0.
  regression::Matrix run(std::span<const double> inputs) const;

 private:
  EsnConfig cfg_;
  Eigen::MatrixXd w_;
  Eigen::VectorXd w_in_;
};

double spectral_radius(const Eigen::MatrixXd& w);

struct EsnFit {
  regression::ReadoutWeights readout;
  double train_nmse;
};

// Trains a readout on the rows after `washout`.
EsnFit esn_baseline(const EchoStateNetwork& esn, std::span<const double> inputs, std::span<const double> targets,
                    std::size_t washout);

}  // namespace qrc::dynamics
