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

#include "qrc/reservoir/capacity.hpp"

#include <cmath>

#include "qrc/errors.hpp"
#include "qrc/random.hpp"

namespace qrc::reservoir {

void CapacityProtocol::validate() const {
  if (max_delay < 0) throw InvalidArgument("capacity.max_delay must be >= 0");
  if (washout < static_cast<std::size_t>(max_delay)) throw InvalidArgument("capacity.washout must cover max_delay");
  if (train == 0 || test < 2) throw InvalidArgument("capacity.train and capacity.test must be positive");
}

double squared_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("series lengths differ");
  if (a.empty()) throw InvalidArgument("empty series");
  const auto n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double cab = 0, caa = 0, cbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cab += (a[i] - ma) * (b[i] - mb);
    caa += (a[i] - ma) * (a[i] - ma);
    cbb += (b[i] - mb) * (b[i] - mb);
  }
  if (caa == 0.0 || cbb == 0.0) return 0.0;
  return cab * cab / (caa * cbb);
}

std::vector<double> capacity_inputs(const CapacityProtocol& p) {
  Rng rng(p.input_seed);
  std::vector<double> x(p.length());
  for (double& v : x) v = p.input == InputKind::Binary ? static_cast<double>(rng.next_u64() >> 63) : rng.uniform01();
  return x;
}

std::vector<double> capacity_target(std::span<const double> inputs, CapacityTask task, int delay) {
  if (delay < 0) throw InvalidArgument("delay must be >= 0");
  const auto d = static_cast<std::size_t>(delay);
  std::vector<double> y(inputs.size(), 0.0);
  for (std::size_t k = d; k < inputs.size(); ++k) {
    if (task == CapacityTask::Stm) {
      y[k] = inputs[k - d];
    } else {
      long sum = 0;
      for (std::size_t i = 0; i <= d; ++i) {
        const double b = inputs[k - i];
        if (b != 0.0 && b != 1.0) throw InvalidArgument("parity task needs 0/1 inputs");
        sum += static_cast<long>(b);
      }
      y[k] = static_cast<double>(sum % 2);
    }
  }
  return y;
}

CapacityResult capacity_from_features(const regression::Matrix& features, std::span<const double> inputs,
                                      CapacityTask task, const CapacityProtocol& p) {
  p.validate();
  if (inputs.size() != p.length() || static_cast<std::size_t>(features.rows()) != p.length())
    throw DimensionMismatch("feature rows and inputs must match the protocol length");
  const auto w0 = static_cast<Eigen::Index>(p.washout);
  const auto tr = static_cast<Eigen::Index>(p.train);
  const auto te = static_cast<Eigen::Index>(p.test);
  const regression::DesignMatrix x_train(features.middleRows(w0, tr));
  const regression::Matrix pinv = regression::pseudoinverse(x_train.matrix());
  const regression::Matrix x_test = features.middleRows(w0 + tr, te);

  CapacityResult out;
  for (int d = 0; d <= p.max_delay; ++d) {
    const std::vector<double> y = capacity_target(inputs, task, d);
    const Eigen::Map<const regression::Vector> y_all(y.data(), static_cast<Eigen::Index>(y.size()));
    const regression::Vector w = pinv * y_all.segment(w0, tr);
    const regression::Vector pred = x_test * w;
    const regression::Vector truth = y_all.segment(w0 + tr, te);
    if (regression::variance(truth) == 0.0) out.degenerate.push_back(d);
    const double c = squared_correlation({pred.data(), static_cast<std::size_t>(te)},
                                         {truth.data(), static_cast<std::size_t>(te)});
    out.per_delay.push_back(c);
    out.total += c;
  }
  return out;
}

regression::Matrix memoryless_features(std::span<const double> inputs) {
  regression::Matrix f(static_cast<Eigen::Index>(inputs.size()), 2);
  for (std::size_t k = 0; k < inputs.size(); ++k) f.row(static_cast<Eigen::Index>(k)) << inputs[k], 1.0;
  return f;
}

CapacityResult stm_parity_capacity(const Reservoir& reservoir, CapacityTask task, const CapacityProtocol& p) {
  p.validate();
  if (p.max_delay < 1) throw InvalidArgument("capacity.max_delay must be >= 1");
  const std::vector<double> u = capacity_inputs(p);
  ReservoirState state = initial_state(reservoir.config());
  regression::Matrix f = run_teacher_forced(u, reservoir, state);
  // Correlation is blind to an offset, so every capacity fit carries an intercept.
  if (!reservoir.config().bias) {
    f.conservativeResize(Eigen::NoChange, f.cols() + 1);
    f.col(f.cols() - 1).setOnes();
  }
  return capacity_from_features(f, u, task, p);
}

}  // namespace qrc::reservoir
