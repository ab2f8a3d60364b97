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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qrc::regression {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultRcond = 1e-10;

// Rows are samples, columns are features. A bias is an explicit column of
// ones added by the caller; nothing here adds one implicitly.
class DesignMatrix {
 public:
  explicit DesignMatrix(Matrix x, std::vector<std::string> labels = {});

  const Matrix& matrix() const { return x_; }
  Eigen::Index rows() const { return x_.rows(); }
  Eigen::Index cols() const { return x_.cols(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Matrix x_;
  std::vector<std::string> labels_;
};

struct ReadoutWeights {
  Vector weights;
  std::vector<std::string> feature_labels;

  Vector predict(const Matrix& x) const;
  double predict_row(const Vector& row) const;
};

// Moore-Penrose pseudoinverse. Singular values below rcond * sigma_max are
// dropped. With ridge > 0 the kept values are inverted as s / (s^2 + ridge).
Matrix pseudoinverse(const Matrix& x, double rcond = kDefaultRcond, double ridge = 0.0);

// Minimal-norm least squares solution w = X^+ y.
ReadoutWeights fit_linear(const DesignMatrix& x, const Vector& y, double rcond = kDefaultRcond,
                          double ridge = 0.0);

struct Metrics {
  double mse = 0.0;
  std::optional<double> nmse;  // empty when y_true has zero variance
  double accuracy = 0.0;
};

double mse(const Vector& y_pred, const Vector& y_true);
// Throws InvalidArgument when y_true has zero variance.
double nmse(const Vector& y_pred, const Vector& y_true);
// Fraction of samples where (y_pred > threshold) == (y_true > threshold).
double accuracy(const Vector& y_pred, const Vector& y_true, double threshold = 0.5);
Metrics metrics(const Vector& y_pred, const Vector& y_true, double threshold = 0.5);

// Population variance.
double variance(const Vector& v);

}  // namespace qrc::regression
