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

#include "qrc/quantum/state.hpp"

namespace qrc::quantum {

// H = sum_{i<j} J_ij X_i X_j + h sum_i Z_i, each unordered pair counted
// once. J must be n x n, symmetric and zero on the diagonal (absolute
// tolerance 1e-12); otherwise InvalidArgument.
Observable ising_hamiltonian(int n, const RMatrix& couplings, double field);

// Eigendecomposition H = Q diag(lambda) Q^dagger kept around so that
// exp(-iHt) can be formed for many t at the cost of one product each.
class HamiltonianEigensystem {
 public:
  explicit HamiltonianEigensystem(const Observable& h);

  const RVector& eigenvalues() const noexcept { return eigenvalues_; }
  const CMatrix& eigenvectors() const noexcept { return eigenvectors_; }

  // Q exp(-i lambda t) Q^dagger. Throws InvalidArgument for non-finite t.
  Unitary unitary(double t) const;

 private:
  RVector eigenvalues_;
  CMatrix eigenvectors_;
};

// exp(-iHt), with hbar = 1.
Unitary evolve_unitary(const Observable& h, double t);

}  // namespace qrc::quantum
