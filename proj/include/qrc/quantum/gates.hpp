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

enum class Axis { X, Y, Z };

// exp(-i * angle * G) for the Pauli generator G of `axis`.
// Note the convention: no factor 1/2 in the exponent.
// Throws InvalidArgument for a non-finite angle.
Eigen::Matrix2cd rotation_gate(Axis axis, double angle);

// |0><0| x I + |1><1| x X; first target is the control.
Eigen::Matrix4cd cnot_gate();
// diag(1, 1, 1, -1)
Eigen::Matrix4cd cz_gate();

// (I x ... x gate x ... x I)|psi>. The first target is the most significant
// qubit of the gate's local index. Throws InvalidArgument for repeated or
// out-of-range targets, DimensionMismatch when the gate size is not
// 2^targets, NotPhysical when the gate is not unitary within kUnitaryTol.
StateVector apply_gate(const StateVector& psi, const CMatrix& gate, std::span<const int> targets);

// Same, for a gate already validated as unitary.
StateVector apply_gate(const StateVector& psi, const Unitary& gate, std::span<const int> targets);

// U|psi> for a full-register unitary.
StateVector apply_unitary(const StateVector& psi, const Unitary& u);

}  // namespace qrc::quantum
