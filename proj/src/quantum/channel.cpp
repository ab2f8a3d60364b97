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

#include "qrc/quantum/channel.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qrc/errors.hpp"
#include "qrc/kernels/kernels.hpp"

namespace qrc::quantum {
namespace {

// Drop bit `bit` from index i, shifting higher bits down.
inline std::size_t remove_bit(std::size_t i, int bit) {
  const std::size_t low = i & ((std::size_t{1} << bit) - 1);
  return ((i >> (bit + 1)) << bit) | low;
}

}  // namespace

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel) {
  if (channel.n_qubits() != rho.n_qubits()) {
    throw DimensionMismatch("channel and density matrix act on different registers");
  }
  CMatrix out = channel.apply_linear(rho.matrix());
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), Check::Full);
}

DensityMatrix conjugate(const DensityMatrix& rho, const Unitary& u) {
  if (u.dim() != rho.dim()) throw DimensionMismatch("unitary and density matrix dimensions differ");
  const auto& k = kernels::active_kernels();
  const std::size_t d = rho.dim();
  const auto n2 = static_cast<Eigen::Index>(d);
  CMatrix left(n2, n2);
  CMatrix out(n2, n2);
  const std::size_t len = d * d;
  k.gemm({u.matrix().data(), len}, {rho.matrix().data(), len}, {left.data(), len}, d, d, d);
  k.gemm_adjoint({left.data(), len}, {u.matrix().data(), len}, {out.data(), len}, d, d, d);
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), Check::Trusted);
}

CMatrix trace_out_qubit(const CMatrix& a, int qubit) {
  if (a.rows() != a.cols()) throw DimensionMismatch("operator must be square");
  const int n = qubits_for_dimension(static_cast<std::size_t>(a.rows()));
  if (n < 2) throw InvalidArgument("cannot trace out the only qubit");
  if (qubit < 0 || qubit >= n) throw InvalidArgument("qubit index out of range");
  const int bit = n - 1 - qubit;
  const std::size_t mask = std::size_t{1} << bit;
  const auto half = static_cast<Eigen::Index>(a.rows() / 2);
  CMatrix out = CMatrix::Zero(half, half);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const auto uj = static_cast<std::size_t>(j);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if ((ui ^ uj) & mask) continue;
      out(static_cast<Eigen::Index>(remove_bit(ui, bit)), static_cast<Eigen::Index>(remove_bit(uj, bit))) +=
          a(i, j);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) throw InvalidArgument("partial trace needs a nonempty keep set");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw InvalidArgument("keep set contains a repeated qubit");
  }
  if (kept.front() < 0 || kept.back() >= n) throw InvalidArgument("keep set index out of range");

  CMatrix reduced = rho.matrix();
  // Trace out from the highest index down so lower positions stay valid.
  for (int q = n - 1; q >= 0; --q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) reduced = trace_out_qubit(reduced, q);
  }
  return DensityMatrix(std::move(reduced), Check::Trusted);
}

CMatrix insert_qubit(const CMatrix& rest, const Eigen::Matrix2cd& single, int position) {
  if (rest.rows() != rest.cols()) throw DimensionMismatch("operator must be square");
  int n_rest = 0;
  if (rest.rows() != 1) n_rest = qubits_for_dimension(static_cast<std::size_t>(rest.rows()));
  const int n = n_rest + 1;
  check_qubit_count(n);
  if (position < 0 || position >= n) throw InvalidArgument("insert position out of range");
  const int bit = n - 1 - position;
  const std::size_t mask = std::size_t{1} << bit;
  const auto d = static_cast<Eigen::Index>(dimension(n));
  CMatrix out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const auto rj = static_cast<Eigen::Index>(remove_bit(uj, bit));
    const int bj = (uj & mask) ? 1 : 0;
    for (Eigen::Index i = 0; i < d; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const int bi = (ui & mask) ? 1 : 0;
      out(i, j) = single(bi, bj) * rest(static_cast<Eigen::Index>(remove_bit(ui, bit)), rj);
    }
  }
  return out;
}

}  // namespace qrc::quantum
