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

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "qrc/quantum/state.hpp"
#include "qrc/regression/linear.hpp"

namespace qrc::qelm {

using Input = std::array<double, 2>;

enum class AngleRule {
  // theta_q = arccos(sqrt(phi(x_{q mod 2}))) on every qubit.
  Linear,
  // theta_{2p} = (p + 1) arccos(sqrt(phi(x_0))),
  // theta_{2p+1} = (p + 1) arccos(sqrt(phi(x_1))).
  PairScaled,
};

struct EncodingSpec {
  int n_qubits = 8;
  AngleRule rule = AngleRule::Linear;
  // Optional map applied to each component before arccos(sqrt(.)). Must
  // send [0, 1] into [0, 1].
  std::function<double(double)> nonlinearity;

  // Per-qubit Y-rotation angles. Throws InvalidArgument for inputs outside
  // [0, 1] or a nonlinearity leaving [0, 1].
  std::vector<double> angles(const Input& x) const;
};

// Product of Y rotations exp(-i theta_q Y) applied to |0...0>.
quantum::StateVector encode(const Input& x, const EncodingSpec& spec);

enum class GateKind { Rx, Rz, Cz };

struct Gate {
  GateKind kind;
  int a;
  int b = -1;  // second qubit, CZ only
  double angle = 0.0;
};

struct GateCensus {
  int rx = 0;
  int rz = 0;
  int cz = 0;
};

// Brickwork of random two-qubit blocks. Each qubit of a block (a, b)
// receives the word Rx Rz Rx, CZ, Rx Rz, CZ, Rx, so a block holds 8 X
// rotations, 4 Z rotations and 2 CZ gates. Angles are uniform on
// [0, 2 pi). One sweep covers the pairs
// (0,1), (2,3), ... then (1,2), (3,4), ...; sweeps are repeated.
class RandomCircuit {
 public:
  static constexpr int kDefaultSweeps = 2;

  RandomCircuit(int n_qubits, std::uint64_t seed, int sweeps = kDefaultSweeps);
  // U = I on n qubits.
  static RandomCircuit identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t seed() const { return seed_; }
  bool is_identity() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::array<int, 2>>& blocks() const { return blocks_; }
  const quantum::Unitary& unitary() const { return unitary_; }

  GateCensus census() const;
  quantum::StateVector apply(const quantum::StateVector& psi) const;

  static std::vector<std::array<int, 2>> sweep_pairs(int n_qubits);

 private:
  RandomCircuit(int n_qubits, std::uint64_t seed, std::vector<Gate> gates, std::vector<std::array<int, 2>> blocks);

  int n_qubits_;
  std::uint64_t seed_;
  std::vector<Gate> gates_;
  std::vector<std::array<int, 2>> blocks_;
  quantum::Unitary unitary_;
};

struct LabeledDataset {
  std::vector<Input> inputs;
  std::vector<int> labels;

  std::size_t size() const { return inputs.size(); }
};

inline constexpr double kCircleRadiusSquared = 0.15;

// Class 0 inside the disk (x0-0.5)^2 + (x1-0.5)^2 <= 0.15, class 1 outside.
int circle_label(const Input& x);

// `count` points uniform on [0, 1)^2, labelled by circle_label.
LabeledDataset generate_circle_dataset(std::size_t count, std::uint64_t seed);

// <Z_q> of U V(x)|0...0> for every qubit.
std::vector<double> z_features(const Input& x, const RandomCircuit& circuit, const EncodingSpec& spec);

// [1, x0, x1, z_1, ..., z_n].
regression::Vector features(const Input& x, const RandomCircuit& circuit, const EncodingSpec& spec);

regression::DesignMatrix feature_matrix(const LabeledDataset& data, const RandomCircuit& circuit,
                                        const EncodingSpec& spec);

// [1, x0, x1] only.
regression::DesignMatrix linear_feature_matrix(const LabeledDataset& data);

regression::Vector label_vector(const LabeledDataset& data);

struct Classifier {
  RandomCircuit circuit;
  EncodingSpec spec;
  regression::ReadoutWeights readout;

  regression::Vector predict(const LabeledDataset& data) const;
};

// Least-squares fit of the features onto the 0/1 labels.
Classifier train_qelm(const LabeledDataset& train, RandomCircuit circuit, EncodingSpec spec);

// Accuracy of the readout thresholded at 0.5.
double evaluate_qelm(const LabeledDataset& test, const Classifier& model);

regression::ReadoutWeights train_linear_baseline(const LabeledDataset& train);
double evaluate_linear_baseline(const LabeledDataset& test, const regression::ReadoutWeights& weights);

}  // namespace qrc::qelm
