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

#include "qrc/quantum/evolution.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qrc/errors.hpp"

namespace qrc::quantum {

Observable ising_hamiltonian(int n, const RMatrix& couplings, double field) {
  check_qubit_count(n);
  if (couplings.rows() != n || couplings.cols() != n) {
    throw DimensionMismatch("coupling matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!couplings.allFinite() || !std::isfinite(field)) {
    throw InvalidArgument("Ising parameters must be finite");
  }
  constexpr double kTol = 1e-12;
  for (int i = 0; i < n; ++i) {
    if (std::abs(couplings(i, i)) > kTol) throw InvalidArgument("coupling matrix diagonal must be zero");
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(couplings(i, j) - couplings(j, i)) > kTol) {
        throw InvalidArgument("coupling matrix must be symmetric");
      }
    }
  }

  const std::size_t d = dimension(n);
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t x = 0; x < d; ++x) {
    double diag = 0.0;
    for (int q = 0; q < n; ++q) diag += (x & qubit_mask(n, q)) ? -field : field;
    h(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = diag;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::size_t y = x ^ qubit_mask(n, i) ^ qubit_mask(n, j);
        h(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += couplings(i, j);
      }
    }
  }
  return Observable(std::move(h));
}

HamiltonianEigensystem::HamiltonianEigensystem(const Observable& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw NotPhysical("Hamiltonian eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Unitary HamiltonianEigensystem::unitary(double t) const {
  if (!std::isfinite(t)) throw InvalidArgument("evolution time must be finite");
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    phases[i] = std::polar(1.0, -eigenvalues_[i] * t);
  }
  return Unitary(eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint());
}

Unitary evolve_unitary(const Observable& h, double t) { return HamiltonianEigensystem(h).unitary(t); }

}  // namespace qrc::quantum
