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

#include "qrc/dynamics/esn.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qrc/errors.hpp"
#include "qrc/random.hpp"

namespace qrc::dynamics {

double spectral_radius(const Eigen::MatrixXd& w) {
  if (w.rows() != w.cols()) throw DimensionMismatch("spectral radius needs a square matrix");
  if (w.size() == 0) return 0.0;
  return Eigen::EigenSolver<Eigen::MatrixXd>(w, false).eigenvalues().cwiseAbs().maxCoeff();
}

EchoStateNetwork::EchoStateNetwork(const EsnConfig& cfg) : cfg_(cfg) {
  if (cfg.nodes < 1) throw InvalidArgument("ESN needs at least one node");
  if (!(cfg.spectral_radius > 0.0) || !(cfg.input_scale >= 0.0)) throw InvalidArgument("bad ESN scaling");
  Rng rng(cfg.seed);
  Rng w_rng = rng.split("recurrent");
  Rng in_rng = rng.split("input");
  w_.resize(cfg.nodes, cfg.nodes);
  for (Eigen::Index j = 0; j < w_.cols(); ++j)
    for (Eigen::Index i = 0; i < w_.rows(); ++i) w_(i, j) = w_rng.uniform(-1.0, 1.0);
  const double rho = spectral_radius(w_);
  if (!(rho > 0.0)) throw InvalidArgument("degenerate recurrent matrix");
  w_ *= cfg.spectral_radius / rho;
  w_in_.resize(cfg.nodes);
  for (Eigen::Index i = 0; i < w_in_.size(); ++i) w_in_[i] = in_rng.uniform(-cfg.input_scale, cfg.input_scale);
}

regression::Matrix EchoStateNetwork::run(std::span<const double> inputs) const {
  regression::Matrix out(static_cast<Eigen::Index>(inputs.size()), cfg_.nodes + 1);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(cfg_.nodes);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    r = (w_ * r + w_in_ * inputs[k]).array().tanh().matrix();
    out.row(static_cast<Eigen::Index>(k)) << r.transpose(), 1.0;
  }
  return out;
}

EsnFit esn_baseline(const EchoStateNetwork& esn, std::span<const double> inputs, std::span<const double> targets,
                    std::size_t washout) {
  if (inputs.size() != targets.size()) throw DimensionMismatch("input and target lengths differ");
  if (washout >= inputs.size()) throw InvalidArgument("washout leaves no training rows");
  const regression::Matrix states = esn.run(inputs);
  const auto rows = static_cast<Eigen::Index>(inputs.size() - washout);
  const regression::Matrix x = states.bottomRows(rows);
  const regression::Vector y =
      Eigen::Map<const regression::Vector>(targets.data() + washout, rows);
  EsnFit fit{regression::fit_linear(regression::DesignMatrix(x), y), 0.0};
  fit.train_nmse = regression::nmse(fit.readout.predict(x), y);
  return fit;
}

}  // namespace qrc::dynamics
