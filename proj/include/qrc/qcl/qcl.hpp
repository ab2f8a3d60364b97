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

#include <numbers>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qrc/qelm/qelm.hpp"
#include "qrc/quantum/pauli.hpp"
#include "qrc/quantum/state.hpp"
#include "qrc/random.hpp"

namespace qrc::qcl {

// A fixed gate W acting on `targets` (first target is the most significant
// qubit of W's local index).
struct FixedUnitary {
  quantum::Unitary gate;
  std::vector<int> targets;
};

// exp(-i (phi_k / 2) P) with P a Pauli string on the whole register.
struct ParamRotation {
  quantum::PauliString generator;
  int param_index;
};

using Element = std::variant<FixedUnitary, ParamRotation>;

class ParameterizedCircuit {
 public:
  ParameterizedCircuit(int n_qubits, int n_params);

  ParameterizedCircuit& add_fixed(quantum::Unitary gate, std::vector<int> targets);
  ParameterizedCircuit& add_rotation(quantum::PauliString generator, int param_index);

  int n_qubits() const { return n_qubits_; }
  int n_params() const { return n_params_; }
  const std::vector<Element>& elements() const { return elements_; }

  // Element indices of the rotations driven by parameter l.
  std::vector<std::size_t> occurrences(int l) const;

  // U(phi)|psi>. When `shifted` is set, only that element's angle is
  // offset by `shift`.
  quantum::StateVector apply(const quantum::StateVector& psi, std::span<const double> phi,
                             std::optional<std::size_t> shifted = std::nullopt, double shift = 0.0) const;

 private:
  int n_qubits_;
  int n_params_;
  std::vector<Element> elements_;
};

// Layered hardware-style ansatz: per layer, Ry then Rz on every qubit
// (two parameters per qubit) followed by a CZ chain.
ParameterizedCircuit layered_ansatz(int n_qubits, int layers);

struct Model {
  ParameterizedCircuit circuit;
  quantum::Observable observable;
  // Input encoding V(x); when empty the circuit starts from |0...0>.
  std::optional<qelm::EncodingSpec> encoding;
};

struct Sample {
  qelm::Input x;
  double y;
};

using Dataset = std::vector<Sample>;

inline constexpr double kDefaultShift = std::numbers::pi / 2;

// <A> on U(phi) V(x)|0...0>.
double forward(const Model& model, const qelm::Input& x, std::span<const double> phi);

// Parameter-shift derivative of <A> with respect to phi_l, summed over every
// rotation that phi_l drives; exactly 0 when there is none. Requires
// eps in (0, pi).
double param_shift_grad(const Model& model, const qelm::Input& x, std::span<const double> phi, int l,
                        double eps = kDefaultShift);

std::vector<double> param_shift_gradient(const Model& model, const qelm::Input& x, std::span<const double> phi,
                                         double eps = kDefaultShift);

struct LossGrad {
  double loss;  // sum_j (<A>(x_j) - y_j)^2
  std::vector<double> grad;
};

LossGrad loss_and_grad(const Model& model, const Dataset& data, std::span<const double> phi,
                       double eps = kDefaultShift);

struct TrainOptions {
  double alpha = 0.01;
  int iters = 200;
  double eps = kDefaultShift;
};

struct TraceRow {
  int iter;
  double loss;
  double grad_norm;
  std::vector<double> params;  // parameters at which loss was evaluated
};

struct TrainTrace {
  std::vector<TraceRow> rows;  // iters + 1 rows; the last has no update
  std::vector<double> final_params;
  // Set when the final loss exceeds the initial loss.
  bool diverged = false;

  double initial_loss() const { return rows.front().loss; }
  double final_loss() const { return rows.back().loss; }
};

// Plain gradient descent phi <- phi - alpha dL/dphi. Throws DivergenceError
// on a non-finite loss.
TrainTrace train(const Model& model, const Dataset& data, std::vector<double> init_phi, const TrainOptions& opts);

// Parameters uniform on [0, 2 pi).
std::vector<double> random_params(int n, Rng& rng);

}  // namespace qrc::qcl
