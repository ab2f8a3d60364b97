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

#include "qrc/qelm/qelm.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrc/errors.hpp"
#include "qrc/quantum/gates.hpp"
#include "qrc/random.hpp"

namespace qrc::qelm {

namespace {

using quantum::CMatrix;
using quantum::cplx;

void check_input(const Input& x) {
  for (double v : x)
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("input component outside [0, 1]: " + std::to_string(v));
}

// Rows of m are acted on by a single-qubit gate on qubit q.
void left_multiply_1q(CMatrix& m, int n, int q, const Eigen::Matrix2cd& g) {
  const auto mask = static_cast<Eigen::Index>(quantum::qubit_mask(n, q));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i & mask) continue;
    const Eigen::Index j = i | mask;
    const Eigen::RowVectorXcd r0 = m.row(i);
    const Eigen::RowVectorXcd r1 = m.row(j);
    m.row(i) = g(0, 0) * r0 + g(0, 1) * r1;
    m.row(j) = g(1, 0) * r0 + g(1, 1) * r1;
  }
}

void left_multiply_cz(CMatrix& m, int n, int a, int b) {
  const auto both = static_cast<Eigen::Index>(quantum::qubit_mask(n, a) | quantum::qubit_mask(n, b));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if ((i & both) == both) m.row(i) *= -1.0;
}

CMatrix circuit_matrix(int n, const std::vector<Gate>& gates) {
  const auto d = static_cast<Eigen::Index>(quantum::dimension(n));
  CMatrix u = CMatrix::Identity(d, d);
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::Rx:
        left_multiply_1q(u, n, g.a, quantum::rotation_gate(quantum::Axis::X, g.angle));
        break;
      case GateKind::Rz:
        left_multiply_1q(u, n, g.a, quantum::rotation_gate(quantum::Axis::Z, g.angle));
        break;
      case GateKind::Cz:
        left_multiply_cz(u, n, g.a, g.b);
        break;
    }
  }
  return u;
}

}  // namespace

std::vector<double> EncodingSpec::angles(const Input& x) const {
  check_input(x);
  quantum::check_qubit_count(n_qubits);
  std::array<double, 2> base{};
  for (int c = 0; c < 2; ++c) {
    const double v = nonlinearity ? nonlinearity(x[static_cast<std::size_t>(c)]) : x[static_cast<std::size_t>(c)];
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("nonlinearity maps input outside [0, 1]");
    base[static_cast<std::size_t>(c)] = std::acos(std::sqrt(v));
  }
  std::vector<double> out(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) {
    const double multiplier = rule == AngleRule::PairScaled ? static_cast<double>(q / 2 + 1) : 1.0;
    out[static_cast<std::size_t>(q)] = multiplier * base[static_cast<std::size_t>(q % 2)];
  }
  return out;
}

quantum::StateVector encode(const Input& x, const EncodingSpec& spec) {
  const std::vector<double> theta = spec.angles(x);
  // Product state: amplitude of |b_0 ... b_{n-1}> is prod_q (cos or sin theta_q).
  const int n = spec.n_qubits;
  const auto d = static_cast<Eigen::Index>(quantum::dimension(n));
  quantum::CVector amp(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double a = 1.0;
    for (int q = 0; q < n; ++q) {
      const double t = theta[static_cast<std::size_t>(q)];
      a *= (static_cast<std::size_t>(i) & quantum::qubit_mask(n, q)) ? std::sin(t) : std::cos(t);
    }
    amp[i] = a;
  }
  return quantum::StateVector(std::move(amp), quantum::Check::Trusted);
}

std::vector<std::array<int, 2>> RandomCircuit::sweep_pairs(int n_qubits) {
  std::vector<std::array<int, 2>> pairs;
  for (int a = 0; a + 1 < n_qubits; a += 2) pairs.push_back({a, a + 1});
  for (int a = 1; a + 1 < n_qubits; a += 2) pairs.push_back({a, a + 1});
  return pairs;
}

RandomCircuit::RandomCircuit(int n_qubits, std::uint64_t seed, std::vector<Gate> gates,
                             std::vector<std::array<int, 2>> blocks)
    : n_qubits_(n_qubits),
      seed_(seed),
      gates_(std::move(gates)),
      blocks_(std::move(blocks)),
      unitary_(circuit_matrix(n_qubits, gates_)) {}

RandomCircuit RandomCircuit::identity(int n_qubits) {
  quantum::check_qubit_count(n_qubits);
  return RandomCircuit(n_qubits, 0, {}, {});
}

namespace {

std::vector<Gate> block_gates(int a, int b, Rng& rng) {
  auto angle = [&] { return rng.uniform(0.0, 2.0 * std::numbers::pi); };
  std::vector<Gate> g;
  for (GateKind k : {GateKind::Rx, GateKind::Rz, GateKind::Rx}) {
    g.push_back({k, a, -1, angle()});
    g.push_back({k, b, -1, angle()});
  }
  g.push_back({GateKind::Cz, a, b});
  for (GateKind k : {GateKind::Rx, GateKind::Rz}) {
    g.push_back({k, a, -1, angle()});
    g.push_back({k, b, -1, angle()});
  }
  g.push_back({GateKind::Cz, a, b});
  g.push_back({GateKind::Rx, a, -1, angle()});
  g.push_back({GateKind::Rx, b, -1, angle()});
  return g;
}

}  // namespace

RandomCircuit::RandomCircuit(int n_qubits, std::uint64_t seed, int sweeps)
    : RandomCircuit([&] {
        quantum::check_qubit_count(n_qubits);
        if (n_qubits < 2) throw InvalidArgument("random circuit needs at least two qubits");
        if (sweeps < 1) throw InvalidArgument("sweeps must be positive");
        Rng rng(seed);
        std::vector<Gate> gates;
        std::vector<std::array<int, 2>> blocks;
        for (int s = 0; s < sweeps; ++s) {
          for (const auto& p : sweep_pairs(n_qubits)) {
            const std::vector<Gate> g = block_gates(p[0], p[1], rng);
            gates.insert(gates.end(), g.begin(), g.end());
            blocks.push_back(p);
          }
        }
        return RandomCircuit(n_qubits, seed, std::move(gates), std::move(blocks));
      }()) {}

GateCensus RandomCircuit::census() const {
  GateCensus c;
  for (const Gate& g : gates_) {
    c.rx += g.kind == GateKind::Rx;
    c.rz += g.kind == GateKind::Rz;
    c.cz += g.kind == GateKind::Cz;
  }
  return c;
}

quantum::StateVector RandomCircuit::apply(const quantum::StateVector& psi) const {
  if (psi.n_qubits() != n_qubits_) throw DimensionMismatch("state and circuit qubit counts differ");
  if (is_identity()) return psi;
  return quantum::StateVector(unitary_.matrix() * psi.amplitudes(), quantum::Check::Trusted);
}

int circle_label(const Input& x) {
  const double r2 = (x[0] - 0.5) * (x[0] - 0.5) + (x[1] - 0.5) * (x[1] - 0.5);
  return r2 <= kCircleRadiusSquared ? 0 : 1;
}

LabeledDataset generate_circle_dataset(std::size_t count, std::uint64_t seed) {
  if (count == 0) throw InvalidArgument("dataset count must be positive");
  Rng rng(seed);
  LabeledDataset data;
  data.inputs.reserve(count);
  data.labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x0 = rng.uniform01();
    const double x1 = rng.uniform01();
    data.inputs.push_back({x0, x1});
    data.labels.push_back(circle_label({x0, x1}));
  }
  return data;
}

std::vector<double> z_features(const Input& x, const RandomCircuit& circuit, const EncodingSpec& spec) {
  if (spec.n_qubits != circuit.n_qubits()) throw DimensionMismatch("encoding and circuit qubit counts differ");
  return quantum::z_expectations(circuit.apply(encode(x, spec)));
}

regression::Vector features(const Input& x, const RandomCircuit& circuit, const EncodingSpec& spec) {
  const std::vector<double> z = z_features(x, circuit, spec);
  regression::Vector f(static_cast<Eigen::Index>(z.size()) + 3);
  f[0] = 1.0;
  f[1] = x[0];
  f[2] = x[1];
  for (std::size_t i = 0; i < z.size(); ++i) f[static_cast<Eigen::Index>(i) + 3] = z[i];
  return f;
}

namespace {

std::vector<std::string> feature_labels(int n_qubits) {
  std::vector<std::string> labels{"bias", "x0", "x1"};
  for (int q = 0; q < n_qubits; ++q) labels.push_back("z" + std::to_string(q));
  return labels;
}

void require_nonempty(const LabeledDataset& data) {
  if (data.inputs.empty()) throw InvalidArgument("empty dataset");
  if (data.inputs.size() != data.labels.size()) throw DimensionMismatch("input and label counts differ");
}

}  // namespace

regression::DesignMatrix feature_matrix(const LabeledDataset& data, const RandomCircuit& circuit,
                                        const EncodingSpec& spec) {
  require_nonempty(data);
  regression::Matrix x(static_cast<Eigen::Index>(data.size()), circuit.n_qubits() + 3);
  for (std::size_t j = 0; j < data.size(); ++j)
    x.row(static_cast<Eigen::Index>(j)) = features(data.inputs[j], circuit, spec).transpose();
  return regression::DesignMatrix(std::move(x), feature_labels(circuit.n_qubits()));
}

regression::DesignMatrix linear_feature_matrix(const LabeledDataset& data) {
  require_nonempty(data);
  regression::Matrix x(static_cast<Eigen::Index>(data.size()), 3);
  for (std::size_t j = 0; j < data.size(); ++j) {
    check_input(data.inputs[j]);
    x.row(static_cast<Eigen::Index>(j)) << 1.0, data.inputs[j][0], data.inputs[j][1];
  }
  return regression::DesignMatrix(std::move(x), {"bias", "x0", "x1"});
}

regression::Vector label_vector(const LabeledDataset& data) {
  require_nonempty(data);
  regression::Vector y(static_cast<Eigen::Index>(data.size()));
  for (std::size_t j = 0; j < data.size(); ++j) {
    const int l = data.labels[j];
    if (l != 0 && l != 1) throw InvalidArgument("labels must be 0 or 1");
    y[static_cast<Eigen::Index>(j)] = l;
  }
  return y;
}

regression::Vector Classifier::predict(const LabeledDataset& data) const {
  return readout.predict(feature_matrix(data, circuit, spec).matrix());
}

Classifier train_qelm(const LabeledDataset& train, RandomCircuit circuit, EncodingSpec spec) {
  const regression::DesignMatrix x = feature_matrix(train, circuit, spec);
  regression::ReadoutWeights w = regression::fit_linear(x, label_vector(train));
  return {std::move(circuit), std::move(spec), std::move(w)};
}

double evaluate_qelm(const LabeledDataset& test, const Classifier& model) {
  return regression::accuracy(model.predict(test), label_vector(test));
}

regression::ReadoutWeights train_linear_baseline(const LabeledDataset& train) {
  return regression::fit_linear(linear_feature_matrix(train), label_vector(train));
}

double evaluate_linear_baseline(const LabeledDataset& test, const regression::ReadoutWeights& weights) {
  return regression::accuracy(weights.predict(linear_feature_matrix(test).matrix()), label_vector(test));
}

}  // namespace qrc::qelm
