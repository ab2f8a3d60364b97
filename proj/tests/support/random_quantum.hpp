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

// Random physical objects for property tests.

#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "qrc/quantum/state.hpp"
#include "qrc/random.hpp"

namespace qrc::testing {

inline quantum::CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  quantum::CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return m;
}

inline quantum::DensityMatrix random_density(int n, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(quantum::dimension(n));
  const quantum::CMatrix g = random_complex(d, d, rng);
  quantum::CMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return quantum::DensityMatrix(std::move(rho));
}

inline quantum::StateVector random_state(int n, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(quantum::dimension(n));
  quantum::CVector v = random_complex(d, 1, rng);
  v.normalize();
  return quantum::StateVector(std::move(v));
}

inline quantum::Unitary random_unitary(int n, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(quantum::dimension(n));
  Eigen::HouseholderQR<quantum::CMatrix> qr(random_complex(d, d, rng));
  return quantum::Unitary(qr.householderQ() * quantum::CMatrix::Identity(d, d));
}

// Kraus operators cut from a random isometry, so sum K^dag K = I.
inline quantum::KrausChannel random_channel(int n, int n_ops, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(quantum::dimension(n));
  Eigen::HouseholderQR<quantum::CMatrix> qr(random_complex(d * n_ops, d, rng));
  const quantum::CMatrix iso = qr.householderQ() * quantum::CMatrix::Identity(d * n_ops, d);
  std::vector<quantum::CMatrix> ops;
  for (int k = 0; k < n_ops; ++k) ops.push_back(iso.block(k * d, 0, d, d));
  return quantum::KrausChannel(std::move(ops));
}

}  // namespace qrc::testing
