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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qrc/quantum/state.hpp"

namespace qrc::quantum {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Tensor product of single-qubit Paulis; letter 0 acts on qubit 0.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> letters);

  // "IXYZ"-style text, one letter per qubit.
  static PauliString parse(std::string_view text);
  // Inverse of index(): base-4 digits with qubit 0 most significant and
  // I < X < Y < Z.
  static PauliString from_index(int n, std::size_t index);
  // A single non-identity letter on qubit q.
  static PauliString single(int n, int q, Pauli p);

  int n_qubits() const noexcept { return static_cast<int>(letters_.size()); }
  const std::vector<Pauli>& letters() const noexcept { return letters_; }
  std::size_t index() const;
  std::string str() const;

  // P|y> = phase(y) |y ^ flip_mask()>
  std::size_t flip_mask() const noexcept { return flip_mask_; }
  cplx phase(std::size_t basis_index) const;

  CMatrix matrix() const;
  // P|psi> without forming the dense matrix.
  CVector apply(const CVector& psi) const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
  std::size_t flip_mask_ = 0;
  std::size_t z_mask_ = 0;  // qubits carrying Z or Y
  int y_count_ = 0;
};

// Real 4^n vector of r_i = Tr[P(i) rho] / 2^n in PauliString::index order.
class PauliStateVector {
 public:
  // Throws InvalidArgument unless the size is 4^n and the identity
  // coefficient equals 1/2^n within kTraceTol / 2^n.
  PauliStateVector(int n, RVector coeffs);

  int n_qubits() const noexcept { return n_qubits_; }
  const RVector& coeffs() const noexcept { return coeffs_; }

  // rho = sum_i r_i P(i)
  CMatrix to_matrix() const;

 private:
  int n_qubits_;
  RVector coeffs_;
};

// Register size accepted by the 4^n diagnostics below.
inline constexpr int kMaxPauliVectorQubits = 6;
inline constexpr int kMaxTransferMatrixQubits = 3;

// Throws InvalidArgument for n > kMaxPauliVectorQubits. The identity
// coefficient is stored as exactly 1/2^n.
PauliStateVector pauli_expectation_vector(const DensityMatrix& rho);

// Pauli coefficients Tr[P(i) A] / 2^n of an arbitrary operator; complex in
// general.
Eigen::VectorXcd pauli_coefficients(const CMatrix& a);

using LinearMap = std::function<CMatrix(const CMatrix&)>;

// K_ij = Tr[P(i) K(P(j))] / 2^n for a Hermiticity-preserving linear map.
// Throws InvalidArgument for n > kMaxTransferMatrixQubits and NotPhysical
// when an entry carries an imaginary part above kImagResidueTol.
RMatrix transfer_matrix(const LinearMap& channel, int n);
RMatrix transfer_matrix(const KrausChannel& channel);
RMatrix transfer_matrix(const Unitary& u);

}  // namespace qrc::quantum
