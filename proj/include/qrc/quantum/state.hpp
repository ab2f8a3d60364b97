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

#include <vector>

#include "qrc/quantum/types.hpp"

namespace qrc::quantum {

// Normalized pure state on n qubits.
class StateVector {
 public:
  // Throws InvalidArgument for a non power-of-two length or, under
  // Check::Full, a norm off by more than kNormTol.
  explicit StateVector(CVector amplitudes, Check check = Check::Full);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  // |c_i|^2
  RVector probabilities() const;

 private:
  CVector amplitudes_;
  int n_qubits_;
};

// |0...0> on n qubits; throws InvalidArgument when n is outside [1, max_qubits()].
StateVector ket_zero(int n);

// Hermitian, unit-trace, positive semidefinite 2^n x 2^n matrix.
// Check::Full verifies Hermiticity, trace and the smallest eigenvalue.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix matrix, Check check = Check::Full);

  static DensityMatrix from_state(const StateVector& psi);
  static DensityMatrix maximally_mixed(int n);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const CMatrix& matrix() const noexcept { return matrix_; }

  double trace_error() const;
  double hermiticity_residual() const;
  double min_eigenvalue() const;

 private:
  CMatrix matrix_;
  int n_qubits_;
};

// Hermitian operator on n qubits.
class Observable {
 public:
  explicit Observable(CMatrix matrix);

  // Z acting on qubit q of an n-qubit register.
  static Observable pauli_z(int n, int q);

  int n_qubits() const noexcept { return n_qubits_; }
  const CMatrix& matrix() const noexcept { return matrix_; }

  // Ascending eigenvalues.
  RVector eigenvalues() const;

 private:
  CMatrix matrix_;
  int n_qubits_;
};

// Unitary matrix on n qubits, checked once at construction to kUnitaryTol.
class Unitary {
 public:
  explicit Unitary(CMatrix matrix);

  static Unitary identity(int n);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const CMatrix& matrix() const noexcept { return matrix_; }

  Unitary adjoint() const;
  // this * other, i.e. `other` acts first.
  Unitary then_after(const Unitary& other) const;

 private:
  CMatrix matrix_;
  int n_qubits_;
};

// Completely positive trace-preserving map given by Kraus operators.
class KrausChannel {
 public:
  // Throws NotPhysical when sum_i K_i^dagger K_i deviates from I by more than 1e-10.
  explicit KrausChannel(std::vector<CMatrix> operators);

  static KrausChannel identity(int n);
  // Non-selective computational-basis measurement, {|i><i|}.
  static KrausChannel dephasing(int n);
  // Applies each unitary with the matching probability.
  static KrausChannel mixture(const std::vector<double>& probabilities,
                              const std::vector<CMatrix>& unitaries);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<CMatrix>& operators() const noexcept { return operators_; }

  // sum_i K_i A K_i^dagger for an arbitrary operator A; linear in A.
  CMatrix apply_linear(const CMatrix& a) const;

 private:
  std::vector<CMatrix> operators_;
  int n_qubits_;
};

double expectation(const StateVector& psi, const Observable& obs);
double expectation(const DensityMatrix& rho, const Observable& obs);

// <Z_q> for every qubit, from the diagonal of rho.
std::vector<double> z_expectations(const DensityMatrix& rho);
std::vector<double> z_expectations(const StateVector& psi);

}  // namespace qrc::quantum
