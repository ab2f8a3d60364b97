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

#include <span>

#include "qrc/quantum/state.hpp"

namespace qrc::quantum {

// sum_i K_i rho K_i^dagger. The result is re-validated as a DensityMatrix.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel);

// U rho U^dagger through the active SIMD kernels. The result is made
// exactly Hermitian by averaging with its adjoint.
DensityMatrix conjugate(const DensityMatrix& rho, const Unitary& u);

// Reduced state on the `keep` qubits, which come out in ascending order.
// Throws InvalidArgument for an empty, repeated or out-of-range keep set.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

// Operator-level partial trace over a single qubit; no physicality checks.
CMatrix trace_out_qubit(const CMatrix& a, int qubit);

// Tensor a single-qubit operator into position `position` of an
// (n-1)-qubit operator, giving an n-qubit operator.
CMatrix insert_qubit(const CMatrix& rest, const Eigen::Matrix2cd& single, int position);

}  // namespace qrc::quantum
