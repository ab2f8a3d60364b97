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

#include "qrc/reservoir/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrc/errors.hpp"
#include "qrc/kernels/kernels.hpp"
#include "qrc/quantum/channel.hpp"
#include "qrc/quantum/evolution.hpp"
#include "qrc/random.hpp"

namespace qrc::reservoir {

using quantum::CMatrix;
using quantum::DensityMatrix;

void ReservoirConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw InvalidArgument("reservoir." + field + ": " + why);
  };
  if (n_qubits < 1 || n_qubits > quantum::max_qubits()) fail("n_qubits", "out of range");
  if (!std::isfinite(j_min) || !std::isfinite(j_max) || j_min > j_max) fail("j_min", "need finite j_min <= j_max");
  if (!std::isfinite(h)) fail("h", "must be finite");
  if (!(tau > 0.0) || !std::isfinite(tau)) fail("tau", "must be positive");
  if (v_nodes < 1) fail("v_nodes", "must be at least 1");
  if (input_qubit < 0 || input_qubit >= n_qubits) fail("input_qubit", "must be below n_qubits");
}

quantum::RMatrix draw_couplings(const ReservoirConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  quantum::RMatrix j = quantum::RMatrix::Zero(cfg.n_qubits, cfg.n_qubits);
  for (int a = 0; a < cfg.n_qubits; ++a)
    for (int b = a + 1; b < cfg.n_qubits; ++b) j(a, b) = j(b, a) = rng.uniform(cfg.j_min, cfg.j_max);
  return j;
}

Reservoir::Reservoir(const ReservoirConfig& cfg)
    : cfg_(cfg),
      couplings_(draw_couplings(cfg)),
      hamiltonian_(quantum::ising_hamiltonian(cfg.n_qubits, couplings_, cfg.h)) {
  const quantum::HamiltonianEigensystem eig(hamiltonian_);
  fractions_.reserve(static_cast<std::size_t>(cfg.v_nodes));
  for (int v = 1; v <= cfg.v_nodes; ++v)
    fractions_.push_back(eig.unitary(cfg.tau * static_cast<double>(v) / static_cast<double>(cfg.v_nodes)));
}

Reservoir build_reservoir(const ReservoirConfig& cfg) { return Reservoir(cfg); }

DensityMatrix inject_input(const DensityMatrix& rho, double x, int input_qubit) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("reservoir input outside [0, 1]: " + std::to_string(x));
  const int n = rho.n_qubits();
  if (input_qubit < 0 || input_qubit >= n) throw InvalidArgument("input qubit out of range");
  Eigen::Matrix2cd rho_x = Eigen::Matrix2cd::Zero();
  rho_x(0, 0) = x;
  rho_x(1, 1) = 1.0 - x;
  if (n == 1) return DensityMatrix(CMatrix(rho_x), quantum::Check::Trusted);
  const CMatrix rest = quantum::trace_out_qubit(rho.matrix(), input_qubit);
  return DensityMatrix(quantum::insert_qubit(rest, rho_x, input_qubit), quantum::Check::Trusted);
}

ReservoirState initial_state(const ReservoirConfig& cfg) {
  cfg.validate();
  if (cfg.initial == InitialState::Zero)
    return {DensityMatrix::from_state(quantum::ket_zero(cfg.n_qubits)), 0};
  return {DensityMatrix::maximally_mixed(cfg.n_qubits), 0};
}

void step_multiplexed(ReservoirState& state, double x, const Reservoir& reservoir, std::span<double> signals) {
  const int n = reservoir.n_qubits();
  const int vn = reservoir.v_nodes();
  if (state.rho.n_qubits() != n) throw DimensionMismatch("state and reservoir qubit counts differ");
  if (signals.size() != static_cast<std::size_t>(reservoir.signal_count()))
    throw DimensionMismatch("signal buffer has the wrong length");

  const DensityMatrix injected = inject_input(state.rho, x, reservoir.config().input_qubit);
  const auto& k = kernels::active_kernels();
  const std::size_t d = injected.dim();
  const std::size_t len = d * d;
  const auto dd = static_cast<Eigen::Index>(d);
  CMatrix left(dd, dd);
  Eigen::VectorXd diag(dd);
  std::vector<double> z(static_cast<std::size_t>(n));

  for (int v = 1; v <= vn; ++v) {
    const CMatrix& u = reservoir.fractions()[static_cast<std::size_t>(v - 1)].matrix();
    k.gemm({u.data(), len}, {injected.matrix().data(), len}, {left.data(), len}, d, d, d);
    if (v < vn) {
      k.diag_product_adjoint({left.data(), len}, {u.data(), len}, {diag.data(), d}, d, d);
    } else {
      CMatrix out(dd, dd);
      k.gemm_adjoint({left.data(), len}, {u.data(), len}, {out.data(), len}, d, d, d);
      out = 0.5 * (out + out.adjoint()).eval();
      diag = out.diagonal().real();
      state.rho = DensityMatrix(std::move(out), quantum::Check::Trusted);
    }
    k.z_expectations({diag.data(), d}, n, z);
    for (int l = 0; l < n; ++l)
      signals[static_cast<std::size_t>(Reservoir::signal_index(l, v, vn))] = z[static_cast<std::size_t>(l)];
  }
  ++state.step_index;
}

std::vector<double> step_multiplexed(ReservoirState& state, double x, const Reservoir& reservoir) {
  std::vector<double> s(static_cast<std::size_t>(reservoir.signal_count()));
  step_multiplexed(state, x, reservoir, s);
  return s;
}

regression::Matrix run_teacher_forced(std::span<const double> inputs, const Reservoir& reservoir,
                                      ReservoirState& state, const StepObserver& observer) {
  if (inputs.empty()) throw InvalidArgument("empty input series");
  const int sc = reservoir.signal_count();
  regression::Matrix out(static_cast<Eigen::Index>(inputs.size()), reservoir.feature_count());
  std::vector<double> s(static_cast<std::size_t>(sc));
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    step_multiplexed(state, inputs[k], reservoir, s);
    const auto row = static_cast<Eigen::Index>(k);
    for (int c = 0; c < sc; ++c) out(row, c) = s[static_cast<std::size_t>(c)];
    if (reservoir.config().bias) out(row, sc) = 1.0;
    if (observer) observer(state.step_index, state.rho);
  }
  return out;
}

regression::ReadoutWeights train_readout(const regression::Matrix& signals, std::span<const double> targets,
                                          std::size_t washout) {
  if (static_cast<std::size_t>(signals.rows()) != targets.size())
    throw DimensionMismatch("signal rows differ from target length");
  if (washout >= targets.size()) throw InvalidArgument("washout leaves no training rows");
  const auto rows = static_cast<Eigen::Index>(targets.size() - washout);
  const regression::Vector y =
      Eigen::Map<const regression::Vector>(targets.data() + washout, rows);
  return regression::fit_linear(regression::DesignMatrix(signals.bottomRows(rows)), y);
}

AutonomousRun run_autonomous(const Reservoir& reservoir, const regression::ReadoutWeights& weights,
                             ReservoirState& state, double first_input, std::size_t steps) {
  if (weights.weights.size() != reservoir.feature_count())
    throw DimensionMismatch("readout size differs from reservoir feature count");
  const int sc = reservoir.signal_count();
  std::vector<double> s(static_cast<std::size_t>(sc));
  regression::Vector row(reservoir.feature_count());
  AutonomousRun run;
  double x = std::clamp(first_input, 0.0, 1.0);
  for (std::size_t k = 0; k < steps; ++k) {
    step_multiplexed(state, x, reservoir, s);
    for (int c = 0; c < sc; ++c) row[c] = s[static_cast<std::size_t>(c)];
    if (reservoir.config().bias) row[sc] = 1.0;
    const double y = weights.predict_row(row);
    if (!std::isfinite(y)) throw DivergenceError("non-finite autonomous output", static_cast<long>(k));
    run.inputs.push_back(x);
    run.outputs.push_back(y);
    if (y < kDivergenceLow || y > kDivergenceHigh) {
      run.clamped.push_back(true);
      run.diverged = true;
      run.diverged_at = static_cast<long>(k);
      break;
    }
    const double next = std::clamp(y, 0.0, 1.0);
    run.clamped.push_back(next != y);
    x = next;
  }
  return run;
}

}  // namespace qrc::reservoir
