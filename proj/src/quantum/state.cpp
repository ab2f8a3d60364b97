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

#include "qrc/quantum/state.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qrc/errors.hpp"
#include "qrc/kernels/kernels.hpp"

namespace qrc::quantum {
namespace {

std::atomic<int> g_max_qubits{12};

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void check_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + " must be square, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

int max_qubits() { return g_max_qubits.load(std::memory_order_relaxed); }

void set_max_qubits(int n) {
  if (n < 1 || n > 30) throw InvalidArgument("max qubit count must lie in [1, 30]");
  g_max_qubits.store(n, std::memory_order_relaxed);
}

void check_qubit_count(int n) {
  if (n < 1 || n > max_qubits()) {
    throw InvalidArgument("qubit count " + std::to_string(n) + " outside [1, " +
                          std::to_string(max_qubits()) + "]");
  }
}

int qubits_for_dimension(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw InvalidArgument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  check_qubit_count(n);
  return n;
}

double hermiticity_residual(const CMatrix& m) { return max_abs(m - m.adjoint()); }

double unitarity_residual(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
}

// ---------------------------------------------------------------------------

StateVector::StateVector(CVector amplitudes, Check check)
    : amplitudes_(std::move(amplitudes)),
      n_qubits_(qubits_for_dimension(static_cast<std::size_t>(amplitudes_.size()))) {
  if (check == Check::Full) {
    const double norm2 = amplitudes_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTol) {
      throw InvalidArgument("state vector is not normalized: |psi|^2 = " + std::to_string(norm2));
    }
  }
}

RVector StateVector::probabilities() const { return amplitudes_.cwiseAbs2(); }

StateVector ket_zero(int n) {
  check_qubit_count(n);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(dimension(n)));
  amps[0] = 1.0;
  return StateVector(std::move(amps), Check::Trusted);
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(CMatrix matrix, Check check) : matrix_(std::move(matrix)) {
  check_square(matrix_, "density matrix");
  n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(matrix_.rows()));
  if (check == Check::Trusted) return;
  if (!matrix_.allFinite()) throw NotPhysical("density matrix has non-finite entries");
  if (const double r = hermiticity_residual(); r > kHermitianTol) {
    throw NotPhysical("density matrix is not Hermitian (residual " + std::to_string(r) + ")");
  }
  if (const double e = trace_error(); e > kTraceTol) {
    throw NotPhysical("density matrix trace differs from 1 by " + std::to_string(e));
  }
  if (const double lmin = min_eigenvalue(); lmin < -kPsdTol) {
    throw NotPhysical("density matrix has negative eigenvalue " + std::to_string(lmin));
  }
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  const CVector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint(), Check::Trusted);
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  check_qubit_count(n);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d), Check::Trusted);
}

double DensityMatrix::trace_error() const { return std::abs(matrix_.trace() - cplx(1.0, 0.0)); }

double DensityMatrix::hermiticity_residual() const {
  return quantum::hermiticity_residual(matrix_);
}

double DensityMatrix::min_eigenvalue() const {
  // Eigenvalues of the Hermitian part; the anti-Hermitian residual is
  // reported separately by hermiticity_residual().
  const CMatrix herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

// ---------------------------------------------------------------------------

Observable::Observable(CMatrix matrix) : matrix_(std::move(matrix)) {
  check_square(matrix_, "observable");
  n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(matrix_.rows()));
  if (!matrix_.allFinite()) throw NotPhysical("observable has non-finite entries");
  if (const double r = hermiticity_residual(matrix_); r > kHermitianTol) {
    throw NotPhysical("observable is not Hermitian (residual " + std::to_string(r) + ")");
  }
}

Observable Observable::pauli_z(int n, int q) {
  check_qubit_count(n);
  if (q < 0 || q >= n) throw InvalidArgument("qubit index out of range");
  const std::size_t d = dimension(n);
  const std::size_t mask = qubit_mask(n, q);
  CMatrix z = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = (i & mask) ? -1.0 : 1.0;
  }
  return Observable(std::move(z));
}

RVector Observable::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------

Unitary::Unitary(CMatrix matrix) : matrix_(std::move(matrix)) {
  check_square(matrix_, "unitary");
  n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(matrix_.rows()));
  if (!matrix_.allFinite()) throw NotPhysical("unitary has non-finite entries");
  if (const double r = unitarity_residual(matrix_); r > kUnitaryTol) {
    throw NotPhysical("matrix is not unitary (|U^dag U - I| = " + std::to_string(r) + ")");
  }
}

Unitary Unitary::identity(int n) {
  check_qubit_count(n);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  return Unitary(CMatrix::Identity(d, d));
}

Unitary Unitary::adjoint() const { return Unitary(matrix_.adjoint()); }

Unitary Unitary::then_after(const Unitary& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("unitary product dimension mismatch");
  return Unitary(matrix_ * other.matrix_);
}

// ---------------------------------------------------------------------------

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw InvalidArgument("channel needs at least one Kraus operator");
  check_square(operators_.front(), "Kraus operator");
  n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(operators_.front().rows()));
  const Eigen::Index d = operators_.front().rows();
  CMatrix completeness = CMatrix::Zero(d, d);
  for (const CMatrix& k : operators_) {
    if (k.rows() != d || k.cols() != d) throw DimensionMismatch("Kraus operators differ in size");
    completeness += k.adjoint() * k;
  }
  if (const double r = max_abs(completeness - CMatrix::Identity(d, d)); r > 1e-10) {
    throw NotPhysical("Kraus operators are not trace preserving (|sum K^dag K - I| = " +
                      std::to_string(r) + ")");
  }
}

KrausChannel KrausChannel::identity(int n) {
  check_qubit_count(n);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  return KrausChannel({CMatrix::Identity(d, d)});
}

KrausChannel KrausChannel::dephasing(int n) {
  check_qubit_count(n);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    CMatrix p = CMatrix::Zero(d, d);
    p(i, i) = 1.0;
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::mixture(const std::vector<double>& probabilities,
                                   const std::vector<CMatrix>& unitaries) {
  if (probabilities.size() != unitaries.size()) {
    throw DimensionMismatch("one probability per unitary required");
  }
  std::vector<CMatrix> ops;
  ops.reserve(unitaries.size());
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (!(probabilities[i] >= 0.0)) throw InvalidArgument("mixture probabilities must be >= 0");
    ops.push_back(std::sqrt(probabilities[i]) * Unitary(unitaries[i]).matrix());
  }
  return KrausChannel(std::move(ops));
}

CMatrix KrausChannel::apply_linear(const CMatrix& a) const {
  const Eigen::Index d = operators_.front().rows();
  if (a.rows() != d || a.cols() != d) throw DimensionMismatch("operator size does not match channel");
  CMatrix out = CMatrix::Zero(d, d);
  for (const CMatrix& k : operators_) out.noalias() += k * a * k.adjoint();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double real_or_throw(cplx value) {
  if (std::abs(value.imag()) > kImagResidueTol) {
    throw NotPhysical("expectation value has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

double expectation(const StateVector& psi, const Observable& obs) {
  if (psi.dim() != static_cast<std::size_t>(obs.matrix().rows())) {
    throw DimensionMismatch("state and observable dimensions differ");
  }
  return real_or_throw(psi.amplitudes().dot(obs.matrix() * psi.amplitudes()));
}

double expectation(const DensityMatrix& rho, const Observable& obs) {
  if (rho.dim() != static_cast<std::size_t>(obs.matrix().rows())) {
    throw DimensionMismatch("density matrix and observable dimensions differ");
  }
  // Tr[A rho] = sum_ij A_ij rho_ji
  return real_or_throw((obs.matrix().cwiseProduct(rho.matrix().transpose())).sum());
}

std::vector<double> z_expectations(const DensityMatrix& rho) {
  const RVector diag = rho.matrix().diagonal().real();
  std::vector<double> out(static_cast<std::size_t>(rho.n_qubits()));
  kernels::active_kernels().z_expectations({diag.data(), static_cast<std::size_t>(diag.size())},
                                           rho.n_qubits(), out);
  return out;
}

std::vector<double> z_expectations(const StateVector& psi) {
  const RVector p = psi.probabilities();
  std::vector<double> out(static_cast<std::size_t>(psi.n_qubits()));
  kernels::active_kernels().z_expectations({p.data(), static_cast<std::size_t>(p.size())},
                                           psi.n_qubits(), out);
  return out;
}

}  // namespace qrc::quantum
