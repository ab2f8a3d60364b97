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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qrc/errors.hpp"
#include "qrc/qelm/qelm.hpp"
#include "qrc/quantum/gates.hpp"
#include "qrc/random.hpp"

namespace {

using namespace qrc::qelm;
using qrc::quantum::CMatrix;

TEST(Encode, SingleQubitExamples) {
  EncodingSpec spec;
  spec.n_qubits = 1;
  const auto z = [&](double x) { return qrc::quantum::z_expectations(encode({x, x}, spec))[0]; };
  EXPECT_NEAR(z(1.0), 1.0, 1e-15);
  EXPECT_NEAR(z(0.5), 0.0, 1e-15);
  EXPECT_NEAR(z(0.0), -1.0, 1e-15);
}

TEST(Encode, UniformProductGivesLinearZ) {
  EncodingSpec spec;
  spec.n_qubits = 5;
  for (double x : {0.0, 0.2, 0.73, 1.0}) {
    for (double v : qrc::quantum::z_expectations(encode({x, x}, spec))) EXPECT_NEAR(v, 2 * x - 1, 1e-12);
  }
}

TEST(Encode, MatchesGateByGateRotations) {
  for (AngleRule rule : {AngleRule::Linear, AngleRule::PairScaled}) {
    EncodingSpec spec;
    spec.n_qubits = 4;
    spec.rule = rule;
    const Input x{0.3, 0.85};
    qrc::quantum::StateVector psi = qrc::quantum::ket_zero(4);
    const std::vector<double> theta = spec.angles(x);
    for (int q = 0; q < 4; ++q) {
      psi = qrc::quantum::apply_gate(psi, CMatrix(qrc::quantum::rotation_gate(qrc::quantum::Axis::Y, theta[q])),
                                     std::vector<int>{q});
    }
    EXPECT_LT((encode(x, spec).amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Encode, AngleRules) {
  EncodingSpec spec;
  spec.n_qubits = 6;
  const Input x{0.25, 0.64};
  const double a0 = std::acos(0.5), a1 = std::acos(0.8);
  const std::vector<double> lin = spec.angles(x);
  for (int q = 0; q < 6; ++q) EXPECT_DOUBLE_EQ(lin[q], q % 2 ? a1 : a0);
  spec.rule = AngleRule::PairScaled;
  const std::vector<double> pair = spec.angles(x);
  for (int q = 0; q < 6; ++q) EXPECT_DOUBLE_EQ(pair[q], (q / 2 + 1) * (q % 2 ? a1 : a0));
  spec.rule = AngleRule::Linear;
  spec.nonlinearity = [](double v) { return v * v; };
  EXPECT_DOUBLE_EQ(spec.angles(x)[0], std::acos(0.25));
}

TEST(Encode, Errors) {
  EncodingSpec spec;
  spec.n_qubits = 2;
  EXPECT_THROW(encode({1.1, 0.5}, spec), qrc::InvalidArgument);
  EXPECT_THROW(encode({0.5, -0.01}, spec), qrc::InvalidArgument);
  spec.nonlinearity = [](double v) { return 2 * v; };
  EXPECT_THROW(encode({0.9, 0.1}, spec), qrc::InvalidArgument);
}

TEST(RandomCircuit, CensusPerBlockAndPairing) {
  const RandomCircuit c(8, 7);
  ASSERT_EQ(c.blocks().size(), 14u);
  ASSERT_EQ(c.gates().size(), 14u * 14);
  const GateCensus total = c.census();
  EXPECT_EQ(total.rx, 8 * 14);
  EXPECT_EQ(total.rz, 4 * 14);
  EXPECT_EQ(total.cz, 2 * 14);
  const std::vector<std::array<int, 2>> expected{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {1, 2}, {3, 4}, {5, 6}};
  EXPECT_EQ(RandomCircuit::sweep_pairs(8), expected);
  for (std::size_t i = 0; i < 14; ++i) EXPECT_EQ(c.blocks()[i], expected[i % 7]);
  // gates of each block stay on the block's pair
  for (std::size_t b = 0; b < 14; ++b) {
    int rx = 0, rz = 0, cz = 0;
    for (std::size_t g = b * 14; g < (b + 1) * 14; ++g) {
      const Gate& gate = c.gates()[g];
      EXPECT_TRUE(gate.a == c.blocks()[b][0] || gate.a == c.blocks()[b][1]);
      rx += gate.kind == GateKind::Rx;
      rz += gate.kind == GateKind::Rz;
      cz += gate.kind == GateKind::Cz;
      if (gate.kind != GateKind::Cz) {
        EXPECT_GE(gate.angle, 0.0);
        EXPECT_LT(gate.angle, 2 * std::numbers::pi);
      }
    }
    EXPECT_EQ(rx, 8);
    EXPECT_EQ(rz, 4);
    EXPECT_EQ(cz, 2);
  }
}

TEST(RandomCircuit, UnitaryMatchesGateByGateSimulation) {
  const RandomCircuit c(4, 3);
  qrc::Rng rng(9);
  qrc::quantum::CVector v(16);
  for (auto& a : v) a = qrc::quantum::cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  v.normalize();
  qrc::quantum::StateVector psi(v);
  const qrc::quantum::StateVector fast = c.apply(psi);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Cz) {
      psi = qrc::quantum::apply_gate(psi, CMatrix(qrc::quantum::cz_gate()), std::vector<int>{g.a, g.b});
    } else {
      const auto axis = g.kind == GateKind::Rx ? qrc::quantum::Axis::X : qrc::quantum::Axis::Z;
      psi = qrc::quantum::apply_gate(psi, CMatrix(qrc::quantum::rotation_gate(axis, g.angle)), std::vector<int>{g.a});
    }
  }
  EXPECT_LT((fast.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RandomCircuit, DeterminedBySeed) {
  const RandomCircuit a(6, 42), b(6, 42), c(6, 43);
  EXPECT_TRUE(a.unitary().matrix() == b.unitary().matrix());
  EXPECT_FALSE(a.unitary().matrix() == c.unitary().matrix());
  EXPECT_THROW(RandomCircuit(1, 0), qrc::InvalidArgument);
}

TEST(Features, IdentityCircuitAndLayout) {
  EncodingSpec spec;
  spec.n_qubits = 2;
  const Input x{0.4, 0.4};
  const qrc::regression::Vector f = features(x, RandomCircuit::identity(2), spec);
  ASSERT_EQ(f.size(), 5);
  EXPECT_EQ(f[0], 1.0);
  EXPECT_EQ(f[1], 0.4);
  EXPECT_EQ(f[2], 0.4);
  EXPECT_NEAR(f[3], -0.2, 1e-12);
  EXPECT_NEAR(f[4], -0.2, 1e-12);
}

TEST(Features, BoundedByOne) {
  EncodingSpec spec;
  const RandomCircuit c(8, 5);
  const LabeledDataset data = generate_circle_dataset(50, 6);
  const qrc::regression::Matrix x = feature_matrix(data, c, spec).matrix();
  EXPECT_EQ(x.cols(), 11);
  EXPECT_LE(x.rightCols(8).cwiseAbs().maxCoeff(), 1.0 + 1e-12);
}

TEST(CircleDataset, LabelsAndArea) {
  EXPECT_EQ(circle_label({0.5, 0.5}), 0);
  EXPECT_EQ(circle_label({0.0, 0.0}), 1);
  const LabeledDataset data = generate_circle_dataset(100000, 11);
  double inside = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    EXPECT_EQ(data.labels[i], circle_label(data.inputs[i]));
    inside += data.labels[i] == 0;
  }
  // The disk of radius sqrt(0.15) < 0.5 lies inside the unit square.
  EXPECT_NEAR(inside / 1e5, std::numbers::pi * 0.15, 0.01);
  EXPECT_THROW(generate_circle_dataset(0, 1), qrc::InvalidArgument);
}

TEST(Qelm, AllZeroLabelsPredictZero) {
  LabeledDataset data = generate_circle_dataset(40, 3);
  for (int& l : data.labels) l = 0;
  EncodingSpec spec;
  spec.n_qubits = 4;
  const Classifier m = train_qelm(data, RandomCircuit(4, 1), spec);
  EXPECT_LT(m.predict(data).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Qelm, EightQubitCircuitClassifiesCircle) {
  const LabeledDataset train = generate_circle_dataset(1000, 21);
  const LabeledDataset test = generate_circle_dataset(1000, 22);
  const Classifier m = train_qelm(train, RandomCircuit(8, 23), EncodingSpec{});
  EXPECT_GE(evaluate_qelm(train, m), 0.9);
  EXPECT_GE(evaluate_qelm(test, m), 0.9);
}

TEST(Qelm, EntanglementAblationOrdering) {
  int ordered = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const LabeledDataset train = generate_circle_dataset(1000, 100 + s);
    const LabeledDataset test = generate_circle_dataset(1000, 200 + s);
    const double entangled = evaluate_qelm(test, train_qelm(train, RandomCircuit(8, 300 + s), EncodingSpec{}));
    const double flat = evaluate_qelm(test, train_qelm(train, RandomCircuit::identity(8), EncodingSpec{}));
    const double linear = evaluate_linear_baseline(test, train_linear_baseline(train));
    EXPECT_LE(flat, 0.65);
    EXPECT_LE(linear, 0.60);
    ordered += entangled > flat && flat > 0.5 - 0.15;
  }
  EXPECT_GE(ordered, 3);
}

TEST(Qelm, Deterministic) {
  const LabeledDataset train = generate_circle_dataset(200, 5);
  const Classifier a = train_qelm(train, RandomCircuit(6, 8), EncodingSpec{6});
  const Classifier b = train_qelm(train, RandomCircuit(6, 8), EncodingSpec{6});
  EXPECT_TRUE(a.readout.weights == b.readout.weights);
}

}  // namespace
