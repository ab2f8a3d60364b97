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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qrc::quantum {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Validation tolerances shared by the value types.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kImagResidueTol = 1e-10;

enum class Check {
  // Every invariant of the value type is verified on construction.
  Full,
  // The caller guarantees the invariants (outputs of norm- or
  // trace-preserving maps applied to valid inputs). Only shapes are checked.
  Trusted,
};

// Upper bound on register size accepted by constructors (default 12).
// Guards against accidental 2^30-element allocations.
int max_qubits();
void set_max_qubits(int n);

// Throws InvalidArgument unless 1 <= n <= max_qubits().
void check_qubit_count(int n);

// Number of qubits for a 2^n dimension; throws InvalidArgument when dim is
// not a power of two or the implied count is out of range.
int qubits_for_dimension(std::size_t dim);

inline std::size_t dimension(int n_qubits) { return std::size_t{1} << n_qubits; }

// Basis-index bit of qubit q. Qubit 0 is the leftmost tensor factor, i.e.
// the most significant bit.
inline std::size_t qubit_mask(int n_qubits, int q) {
  return std::size_t{1} << (n_qubits - 1 - q);
}

// max_ij |m_ij - conj(m_ji)|
double hermiticity_residual(const CMatrix& m);

// max_ij |(U^dagger U - I)_ij|
double unitarity_residual(const CMatrix& u);

}  // namespace qrc::quantum
