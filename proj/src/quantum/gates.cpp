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

#include "qrc/quantum/gates.hpp"

#include <cmath>
#include <vector>

#include "qrc/errors.hpp"

namespace qrc::quantum {

Eigen::Matrix2cd rotation_gate(Axis axis, double angle) {
  if (!std::isfinite(angle)) throw InvalidArgument("rotation angle must be finite");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd g;
  switch (axis) {
    case Axis::X:
      g << c, -i * s, -i * s, c;
      break;
    case Axis::Y:
      g << c, -s, s, c;
      break;
    case Axis::Z:
      g << cplx(c, -s), 0.0, 0.0, cplx(c, s);
      break;
  }
  return g;
}

Eigen::Matrix4cd cnot_gate() {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = 1.0;
  g(2, 3) = 1.0;
  g(3, 2) = 1.0;
  return g;
}

Eigen::Matrix4cd cz_gate() {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(3, 3) = -1.0;
  return g;
}

namespace {

StateVector apply_local(const StateVector& psi, const CMatrix& gate, std::span<const int> targets) {
  if (gate.rows() != gate.cols() ||
      gate.rows() != static_cast<Eigen::Index>(std::size_t{1} << targets.size())) {
    throw DimensionMismatch("gate of size " + std::to_string(gate.rows()) + " does not act on " +
                            std::to_string(targets.size()) + " target(s)");
  }
  const int n = psi.n_qubits();
  std::size_t target_mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) throw InvalidArgument("gate target " + std::to_string(t) + " out of range");
    const std::size_t m = qubit_mask(n, t);
    if (target_mask & m) throw InvalidArgument("gate targets must be distinct");
    target_mask |= m;
  }

  const std::size_t local_dim = std::size_t{1} << targets.size();
  std::vector<std::size_t> offsets(local_dim, 0);
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (l & (std::size_t{1} << (targets.size() - 1 - t))) offsets[l] |= qubit_mask(n, targets[t]);
    }
  }

  const CVector& in = psi.amplitudes();
  CVector out(in.size());
  std::vector<cplx> local(local_dim);
  for (std::size_t base = 0; base < psi.dim(); ++base) {
    if (base & target_mask) continue;
    for (std::size_t c = 0; c < local_dim; ++c) local[c] = in[static_cast<Eigen::Index>(base | offsets[c])];
    for (std::size_t r = 0; r < local_dim; ++r) {
      cplx acc = 0.0;
      for (std::size_t c = 0; c < local_dim; ++c) {
        acc += gate(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * local[c];
      }
      out[static_cast<Eigen::Index>(base | offsets[r])] = acc;
    }
  }
  return StateVector(std::move(out), Check::Trusted);
}

}  // namespace

StateVector apply_gate(const StateVector& psi, const CMatrix& gate, std::span<const int> targets) {
  if (gate.rows() == gate.cols()) {
    if (const double r = unitarity_residual(gate); !(r <= kUnitaryTol)) {
      throw NotPhysical("gate is not unitary (|U^dag U - I| = " + std::to_string(r) + ")");
    }
  }
  return apply_local(psi, gate, targets);
}

StateVector apply_gate(const StateVector& psi, const Unitary& gate, std::span<const int> targets) {
  return apply_local(psi, gate.matrix(), targets);
}

StateVector apply_unitary(const StateVector& psi, const Unitary& u) {
  if (u.dim() != psi.dim()) throw DimensionMismatch("unitary and state dimensions differ");
  return StateVector(u.matrix() * psi.amplitudes(), Check::Trusted);
}

}  // namespace qrc::quantum
