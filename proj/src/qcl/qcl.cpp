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

#include "qrc/qcl/qcl.hpp"

#include <cmath>
#include <string>

#include "qrc/errors.hpp"
#include "qrc/quantum/gates.hpp"

namespace qrc::qcl {

namespace {

using quantum::CVector;
using quantum::cplx;

void check_params(const ParameterizedCircuit& c, std::span<const double> phi) {
  if (static_cast<int>(phi.size()) != c.n_params()) throw DimensionMismatch("parameter vector length differs");
  for (double p : phi)
    if (!std::isfinite(p)) throw InvalidArgument("non-finite parameter");
}

CVector rotate(const CVector& psi, const quantum::PauliString& p, double angle) {
  // exp(-i (angle/2) P) = cos(angle/2) I - i sin(angle/2) P, since P^2 = I.
  return std::cos(angle / 2) * psi + cplx(0.0, -std::sin(angle / 2)) * p.apply(psi);
}

}  // namespace

ParameterizedCircuit::ParameterizedCircuit(int n_qubits, int n_params) : n_qubits_(n_qubits), n_params_(n_params) {
  quantum::check_qubit_count(n_qubits);
  if (n_params < 0) throw InvalidArgument("negative parameter count");
}

ParameterizedCircuit& ParameterizedCircuit::add_fixed(quantum::Unitary gate, std::vector<int> targets) {
  if (gate.dim() != quantum::dimension(static_cast<int>(targets.size())))
    throw DimensionMismatch("gate size differs from 2^targets");
  for (int t : targets)
    if (t < 0 || t >= n_qubits_) throw InvalidArgument("gate target out of range");
  elements_.emplace_back(FixedUnitary{std::move(gate), std::move(targets)});
  return *this;
}

ParameterizedCircuit& ParameterizedCircuit::add_rotation(quantum::PauliString generator, int param_index) {
  if (generator.n_qubits() != n_qubits_) throw DimensionMismatch("generator size differs from register");
  if (param_index < 0 || param_index >= n_params_)
    throw InvalidArgument("parameter index " + std::to_string(param_index) + " out of range");
  elements_.emplace_back(ParamRotation{std::move(generator), param_index});
  return *this;
}

std::vector<std::size_t> ParameterizedCircuit::occurrences(int l) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (const auto* r = std::get_if<ParamRotation>(&elements_[i]); r && r->param_index == l) out.push_back(i);
  return out;
}

quantum::StateVector ParameterizedCircuit::apply(const quantum::StateVector& psi, std::span<const double> phi,
                                                 std::optional<std::size_t> shifted, double shift) const {
  check_params(*this, phi);
  if (psi.n_qubits() != n_qubits_) throw DimensionMismatch("state and circuit qubit counts differ");
  quantum::StateVector out = psi;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (const auto* f = std::get_if<FixedUnitary>(&elements_[i])) {
      out = quantum::apply_gate(out, f->gate, f->targets);
    } else {
      const auto& r = std::get<ParamRotation>(elements_[i]);
      double angle = phi[static_cast<std::size_t>(r.param_index)];
      if (shifted && *shifted == i) angle += shift;
      out = quantum::StateVector(rotate(out.amplitudes(), r.generator, angle), quantum::Check::Trusted);
    }
  }
  return out;
}

ParameterizedCircuit layered_ansatz(int n_qubits, int layers) {
  if (layers < 1) throw InvalidArgument("ansatz needs at least one layer");
  ParameterizedCircuit c(n_qubits, 2 * n_qubits * layers);
  const quantum::Unitary cz{quantum::CMatrix(quantum::cz_gate())};
  int k = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (int q = 0; q < n_qubits; ++q) {
      c.add_rotation(quantum::PauliString::single(n_qubits, q, quantum::Pauli::Y), k++);
      c.add_rotation(quantum::PauliString::single(n_qubits, q, quantum::Pauli::Z), k++);
    }
    for (int q = 0; q + 1 < n_qubits; ++q) c.add_fixed(cz, {q, q + 1});
  }
  return c;
}

namespace {

quantum::StateVector input_state(const Model& model, const qelm::Input& x) {
  if (!model.encoding) return quantum::ket_zero(model.circuit.n_qubits());
  if (model.encoding->n_qubits != model.circuit.n_qubits())
    throw DimensionMismatch("encoding and circuit qubit counts differ");
  return qelm::encode(x, *model.encoding);
}

double evaluate(const Model& model, const quantum::StateVector& in, std::span<const double> phi,
                std::optional<std::size_t> shifted = std::nullopt, double shift = 0.0) {
  return quantum::expectation(model.circuit.apply(in, phi, shifted, shift), model.observable);
}

double shift_grad(const Model& model, const quantum::StateVector& in, std::span<const double> phi, int l,
                  double eps) {
  double g = 0.0;
  for (std::size_t at : model.circuit.occurrences(l))
    g += (evaluate(model, in, phi, at, eps) - evaluate(model, in, phi, at, -eps)) / (2.0 * std::sin(eps));
  return g;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < std::numbers::pi)) throw InvalidArgument("shift must lie in (0, pi)");
}

}  // namespace

double forward(const Model& model, const qelm::Input& x, std::span<const double> phi) {
  if (model.observable.n_qubits() != model.circuit.n_qubits())
    throw DimensionMismatch("observable and circuit qubit counts differ");
  return evaluate(model, input_state(model, x), phi);
}

double param_shift_grad(const Model& model, const qelm::Input& x, std::span<const double> phi, int l, double eps) {
  check_eps(eps);
  check_params(model.circuit, phi);
  if (l < 0 || l >= model.circuit.n_params()) throw InvalidArgument("parameter index out of range");
  return shift_grad(model, input_state(model, x), phi, l, eps);
}

std::vector<double> param_shift_gradient(const Model& model, const qelm::Input& x, std::span<const double> phi,
                                         double eps) {
  check_eps(eps);
  check_params(model.circuit, phi);
  const quantum::StateVector in = input_state(model, x);
  std::vector<double> g(static_cast<std::size_t>(model.circuit.n_params()));
  for (int l = 0; l < model.circuit.n_params(); ++l) g[static_cast<std::size_t>(l)] = shift_grad(model, in, phi, l, eps);
  return g;
}

LossGrad loss_and_grad(const Model& model, const Dataset& data, std::span<const double> phi, double eps) {
  if (data.empty()) throw InvalidArgument("empty dataset");
  LossGrad out{0.0, std::vector<double>(static_cast<std::size_t>(model.circuit.n_params()), 0.0)};
  for (const Sample& s : data) {
    const double residual = forward(model, s.x, phi) - s.y;
    out.loss += residual * residual;
    const std::vector<double> g = param_shift_gradient(model, s.x, phi, eps);
    for (std::size_t l = 0; l < g.size(); ++l) out.grad[l] += 2.0 * residual * g[l];
  }
  return out;
}

TrainTrace train(const Model& model, const Dataset& data, std::vector<double> init_phi, const TrainOptions& opts) {
  if (!(opts.alpha >= 0.0) || !std::isfinite(opts.alpha)) throw InvalidArgument("alpha must be finite and >= 0");
  if (opts.iters < 0) throw InvalidArgument("iters must be >= 0");
  TrainTrace trace;
  std::vector<double> phi = std::move(init_phi);
  for (int it = 0; it <= opts.iters; ++it) {
    const LossGrad lg = loss_and_grad(model, data, phi, opts.eps);
    double norm2 = 0.0;
    for (double g : lg.grad) norm2 += g * g;
    if (!std::isfinite(lg.loss) || !std::isfinite(norm2)) throw DivergenceError("non-finite loss or gradient", it);
    trace.rows.push_back({it, lg.loss, std::sqrt(norm2), phi});
    if (it == opts.iters) break;
    for (std::size_t l = 0; l < phi.size(); ++l) phi[l] -= opts.alpha * lg.grad[l];
  }
  trace.final_params = phi;
  trace.diverged = trace.final_loss() > trace.initial_loss();
  return trace;
}

std::vector<double> random_params(int n, Rng& rng) {
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& v : p) v = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return p;
}

}  // namespace qrc::qcl
