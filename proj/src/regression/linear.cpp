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

#include "qrc/regression/linear.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "qrc/errors.hpp"

namespace qrc::regression {

namespace {

void require_finite(const Matrix& x, const char* what) {
  if (!x.allFinite()) throw InvalidArgument(std::string(what) + " has non-finite entries");
}

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("prediction and target lengths differ");
  if (a.size() == 0) throw InvalidArgument("empty series");
}

}  // namespace

DesignMatrix::DesignMatrix(Matrix x, std::vector<std::string> labels) : x_(std::move(x)), labels_(std::move(labels)) {
  require_finite(x_, "design matrix");
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != x_.cols())
    throw DimensionMismatch("feature label count differs from column count");
}

Vector ReadoutWeights::predict(const Matrix& x) const {
  if (x.cols() != weights.size()) throw DimensionMismatch("feature count differs from weight count");
  return x * weights;
}

double ReadoutWeights::predict_row(const Vector& row) const {
  if (row.size() != weights.size()) throw DimensionMismatch("feature count differs from weight count");
  return row.dot(weights);
}

Matrix pseudoinverse(const Matrix& x, double rcond, double ridge) {
  require_finite(x, "matrix");
  if (!(rcond >= 0.0) || !(ridge >= 0.0)) throw InvalidArgument("rcond and ridge must be non-negative");
  if (x.size() == 0) return Matrix::Zero(x.cols(), x.rows());
  Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff = rcond * (s.size() > 0 ? s[0] : 0.0);
  Vector inv = Vector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff && s[i] > 0.0) inv[i] = ridge > 0.0 ? s[i] / (s[i] * s[i] + ridge) : 1.0 / s[i];
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

ReadoutWeights fit_linear(const DesignMatrix& x, const Vector& y, double rcond, double ridge) {
  if (x.rows() != y.size()) throw DimensionMismatch("design matrix rows differ from target length");
  if (!y.allFinite()) throw InvalidArgument("targets have non-finite entries");
  return {pseudoinverse(x.matrix(), rcond, ridge) * y, x.labels()};
}

double variance(const Vector& v) {
  if (v.size() == 0) throw InvalidArgument("empty series");
  return (v.array() - v.mean()).square().mean();
}

double mse(const Vector& y_pred, const Vector& y_true) {
  require_same_length(y_pred, y_true);
  return (y_pred - y_true).squaredNorm() / static_cast<double>(y_true.size());
}

double nmse(const Vector& y_pred, const Vector& y_true) {
  require_same_length(y_pred, y_true);
  const double var = variance(y_true);
  if (var == 0.0) throw InvalidArgument("nmse undefined for zero-variance targets");
  return mse(y_pred, y_true) / var;
}

double accuracy(const Vector& y_pred, const Vector& y_true, double threshold) {
  require_same_length(y_pred, y_true);
  Eigen::Index hits = 0;
  for (Eigen::Index i = 0; i < y_true.size(); ++i) hits += (y_pred[i] > threshold) == (y_true[i] > threshold);
  return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

Metrics metrics(const Vector& y_pred, const Vector& y_true, double threshold) {
  Metrics m;
  m.mse = mse(y_pred, y_true);
  if (variance(y_true) > 0.0) m.nmse = m.mse / variance(y_true);
  m.accuracy = accuracy(y_pred, y_true, threshold);
  return m;
}

}  // namespace qrc::regression
