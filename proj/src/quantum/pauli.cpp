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

#include "qrc/quantum/pauli.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qrc/errors.hpp"

namespace qrc::quantum {

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
  const int n = n_qubits();
  check_qubit_count(n);
  for (int q = 0; q < n; ++q) {
    const std::size_t mask = qubit_mask(n, q);
    switch (letters_[static_cast<std::size_t>(q)]) {
      case Pauli::I:
        break;
      case Pauli::X:
        flip_mask_ |= mask;
        break;
      case Pauli::Y:
        flip_mask_ |= mask;
        z_mask_ |= mask;
        ++y_count_;
        break;
      case Pauli::Z:
        z_mask_ |= mask;
        break;
    }
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default:
        throw InvalidArgument(std::string("invalid Pauli letter '") + c + "'");
    }
  }
  return PauliString(std::move(letters));
}

PauliString PauliString::from_index(int n, std::size_t index) {
  check_qubit_count(n);
  if (n > 31 || index >= (std::size_t{1} << (2 * n))) {
    throw InvalidArgument("Pauli index out of range");
  }
  std::vector<Pauli> letters(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    letters[static_cast<std::size_t>(q)] = static_cast<Pauli>(index & 3U);
    index >>= 2;
  }
  return PauliString(std::move(letters));
}

PauliString PauliString::single(int n, int q, Pauli p) {
  check_qubit_count(n);
  if (q < 0 || q >= n) throw InvalidArgument("qubit index out of range");
  std::vector<Pauli> letters(static_cast<std::size_t>(n), Pauli::I);
  letters[static_cast<std::size_t>(q)] = p;
  return PauliString(std::move(letters));
}

std::size_t PauliString::index() const {
  std::size_t idx = 0;
  for (Pauli p : letters_) idx = idx * 4 + static_cast<std::size_t>(p);
  return idx;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back("IXYZ"[static_cast<int>(p)]);
  return s;
}

cplx PauliString::phase(std::size_t basis_index) const {
  // i^(#Y) * (-1)^(number of Y/Z qubits in state |1>)
  static constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = kIPowers[y_count_ & 3];
  return (std::popcount(basis_index & z_mask_) & 1) ? -base : base;
}

CMatrix PauliString::matrix() const {
  const auto d = static_cast<Eigen::Index>(dimension(n_qubits()));
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index y = 0; y < d; ++y) {
    const auto uy = static_cast<std::size_t>(y);
    m(static_cast<Eigen::Index>(uy ^ flip_mask_), y) = phase(uy);
  }
  return m;
}

CVector PauliString::apply(const CVector& psi) const {
  if (psi.size() != static_cast<Eigen::Index>(dimension(n_qubits()))) {
    throw DimensionMismatch("Pauli string and state sizes differ");
  }
  CVector out(psi.size());
  for (Eigen::Index y = 0; y < psi.size(); ++y) {
    const auto uy = static_cast<std::size_t>(y);
    out[static_cast<Eigen::Index>(uy ^ flip_mask_)] = phase(uy) * psi[y];
  }
  return out;
}

// ---------------------------------------------------------------------------

PauliStateVector::PauliStateVector(int n, RVector coeffs) : n_qubits_(n), coeffs_(std::move(coeffs)) {
  check_qubit_count(n);
  if (n > kMaxPauliVectorQubits) throw InvalidArgument("Pauli state vector limited to 6 qubits");
  if (coeffs_.size() != static_cast<Eigen::Index>(std::size_t{1} << (2 * n))) {
    throw DimensionMismatch("Pauli state vector must have 4^n entries");
  }
  const double expected = 1.0 / static_cast<double>(dimension(n));
  if (std::abs(coeffs_[0] - expected) > kTraceTol * expected) {
    throw NotPhysical("identity coefficient must equal 1/2^n");
  }
}

CMatrix PauliStateVector::to_matrix() const {
  const auto d = static_cast<Eigen::Index>(dimension(n_qubits_));
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    const PauliString p = PauliString::from_index(n_qubits_, static_cast<std::size_t>(i));
    for (Eigen::Index y = 0; y < d; ++y) {
      const auto uy = static_cast<std::size_t>(y);
      m(static_cast<Eigen::Index>(uy ^ p.flip_mask()), y) += coeffs_[i] * p.phase(uy);
    }
  }
  return m;
}

Eigen::VectorXcd pauli_coefficients(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("operator must be square");
  const int n = qubits_for_dimension(static_cast<std::size_t>(a.rows()));
  if (n > kMaxPauliVectorQubits) throw InvalidArgument("Pauli decomposition limited to 6 qubits");
  const std::size_t count = std::size_t{1} << (2 * n);
  const auto d = a.rows();
  const double scale = 1.0 / static_cast<double>(d);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    const PauliString p = PauliString::from_index(n, i);
    // Tr[P A] = sum_z phase(z) A(z, z ^ flip)
    cplx acc = 0.0;
    for (Eigen::Index z = 0; z < d; ++z) {
      const auto uz = static_cast<std::size_t>(z);
      acc += p.phase(uz) * a(z, static_cast<Eigen::Index>(uz ^ p.flip_mask()));
    }
    out[static_cast<Eigen::Index>(i)] = acc * scale;
  }
  return out;
}

PauliStateVector pauli_expectation_vector(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (n > kMaxPauliVectorQubits) {
    throw InvalidArgument("pauli_expectation_vector supports at most 6 qubits, got " +
                          std::to_string(n));
  }
  const Eigen::VectorXcd c = pauli_coefficients(rho.matrix());
  RVector r = c.real();
  r[0] = 1.0 / static_cast<double>(dimension(n));
  return PauliStateVector(n, std::move(r));
}

RMatrix transfer_matrix(const LinearMap& channel, int n) {
  check_qubit_count(n);
  if (n > kMaxTransferMatrixQubits) {
    throw InvalidArgument("transfer_matrix supports at most 3 qubits, got " + std::to_string(n));
  }
  const auto count = static_cast<Eigen::Index>(std::size_t{1} << (2 * n));
  RMatrix k(count, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    const CMatrix image = channel(PauliString::from_index(n, static_cast<std::size_t>(j)).matrix());
    const Eigen::VectorXcd column = pauli_coefficients(image);
    if (const double im = column.imag().cwiseAbs().maxCoeff(); im > kImagResidueTol) {
      throw NotPhysical("map does not preserve Hermiticity (imaginary transfer entry " +
                        std::to_string(im) + ")");
    }
    k.col(j) = column.real();
  }
  return k;
}

RMatrix transfer_matrix(const KrausChannel& channel) {
  return transfer_matrix([&channel](const CMatrix& a) { return channel.apply_linear(a); },
                         channel.n_qubits());
}

RMatrix transfer_matrix(const Unitary& u) {
  const CMatrix& m = u.matrix();
  return transfer_matrix([&m](const CMatrix& a) -> CMatrix { return m * a * m.adjoint(); },
                         u.n_qubits());
}

}  // namespace qrc::quantum
