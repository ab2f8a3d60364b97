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
#include <vector>

#include <gtest/gtest.h>

#include "qrc/dynamics/esn.hpp"
#include "qrc/dynamics/normalize.hpp"
#include "qrc/dynamics/systems.hpp"
#include "qrc/errors.hpp"
#include "qrc/random.hpp"

namespace {

using namespace qrc::dynamics;

OdeSystem exponential() {
  return {1, [](const Vector& s, double) { return Vector(s); }, {}};
}

TEST(Rk4, ZeroDerivativeKeepsState) {
  const OdeSystem still{2, [](const Vector&, double) { return Vector(Vector::Zero(2)); }, {}};
  const Vector s = Vector::Constant(2, 3.5);
  EXPECT_EQ(rk4_step(still, s, 0.0, 0.02), s);
}

TEST(Rk4, ExponentialSingleStep) {
  EXPECT_NEAR(rk4_step(exponential(), Vector::Ones(1), 0.0, 0.02)[0], std::exp(0.02), 1e-9);
}

TEST(Rk4, FourthOrderConvergence) {
  auto endpoint_error = [](int steps) {
    const double dt = 1.0 / steps;
    Vector s = Vector::Ones(1);
    for (int i = 0; i < steps; ++i) s = rk4_step(exponential(), s, i * dt, dt);
    return std::abs(s[0] - std::exp(1.0));
  };
  for (int n : {10, 20, 40}) {
    const double ratio = endpoint_error(n) / endpoint_error(2 * n);
    EXPECT_NEAR(ratio, 16.0, 1.0) << n;
  }
}

TEST(Rk4, Errors) {
  EXPECT_THROW(rk4_step(exponential(), Vector::Ones(1), 0.0, 0.0), qrc::InvalidArgument);
  EXPECT_THROW(rk4_step(exponential(), Vector::Ones(2), 0.0, 0.1), qrc::DimensionMismatch);
  const OdeSystem blowup{1, [](const Vector&, double) { return Vector(Vector::Constant(1, NAN)); }, {}};
  EXPECT_THROW(rk4_step(blowup, Vector::Ones(1), 0.0, 0.1), qrc::DivergenceError);
}

TEST(Lorenz, OriginIsFixed) {
  const TimeSeries s = lorenz_series({100, kDefaultDt, 0, 1}, {}, Vector::Zero(3));
  for (double v : s.values) EXPECT_EQ(v, 0.0);
}

TEST(Lorenz, SensitiveAndBounded) {
  Vector a = Vector::Ones(3), b = a;
  b[0] += 1e-8;
  const SamplingOptions opts{4000, kDefaultDt, 5000, 1};
  const TimeSeries sa = lorenz_series(opts, {}, a), sb = lorenz_series(opts, {}, b);
  double max_sep = 0.0, max_abs = 0.0;
  for (std::size_t i = 0; i < sa.values.size(); ++i) {
    max_sep = std::max(max_sep, std::abs(sa.values[i] - sb.values[i]));
    max_abs = std::max(max_abs, std::abs(sa.values[i]));
  }
  EXPECT_GT(max_sep, 1.0);
  EXPECT_LT(max_abs, 25.0);
  EXPECT_EQ(sa.values.size(), 4000u);
  EXPECT_NEAR(sa.t.front(), 5000 * kDefaultDt, 1e-9);
}

TEST(Rossler, DerivativeAtOriginAndDeterminism) {
  const Vector d = rossler().derivative(Vector::Zero(3), 0.0);
  EXPECT_EQ(d[0], 0.0);
  EXPECT_EQ(d[1], 0.0);
  EXPECT_DOUBLE_EQ(d[2], 0.2);
  const SamplingOptions opts{2000, kDefaultDt, 1000, 1};
  EXPECT_EQ(rossler_series(opts).values, rossler_series(opts).values);
}

TEST(Rossler, BoundedAndAperiodic) {
  const TimeSeries s = rossler_series({100000, kDefaultDt, 5000, 1});
  double max_abs = 0.0;
  for (double v : s.values) max_abs = std::max(max_abs, std::abs(v));
  EXPECT_LT(max_abs, 20.0);
  // No exact recurrence of the (x_k, x_{k+1}) pair after the first revisit window.
  const double x0 = s.values[0], x1 = s.values[1];
  for (std::size_t i = 100; i + 1 < s.values.size(); ++i)
    EXPECT_FALSE(std::abs(s.values[i] - x0) < 1e-6 && std::abs(s.values[i + 1] - x1) < 1e-6) << i;
}

TEST(MackeyGlass, FixedPointIsStationary) {
  DelayOptions d;
  d.history = [](double) { return 1.0; };
  const TimeSeries s = mackey_glass_series({10000, kDefaultDt, 0, 1}, {}, d);
  for (double v : s.values) EXPECT_NEAR(v, 1.0, 1e-9);
}

TEST(MackeyGlass, ChaoticBandAndLength) {
  const TimeSeries s = mackey_glass_series({20000, kDefaultDt, 5000, 1});
  ASSERT_EQ(s.values.size(), 20000u);
  double lo = 1e9, hi = -1e9;
  for (double v : s.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 1.6);
  EXPECT_GT(hi - lo, 0.5);
}

TEST(MackeyGlass, InterpolatedLookupMatchesFinerGridClosely) {
  // Off-grid delay forces interpolation at every stage; halving dt should
  // barely move the trajectory over a short horizon.
  DelayOptions d;
  d.delay = 17.01;
  const TimeSeries coarse = mackey_glass_series({2, 0.02, 2000, 1}, {}, d);
  const TimeSeries fine = mackey_glass_series({2, 0.01, 4000, 1}, {}, d);
  EXPECT_NEAR(coarse.values[0], fine.values[0], 1e-4);
}

TEST(MackeyGlass, Errors) {
  DelayOptions d;
  d.history = [](double) { return 0.0; };
  EXPECT_THROW(mackey_glass_series({10, kDefaultDt, 0, 1}, {}, d), qrc::InvalidArgument);
  DelayOptions short_delay;
  short_delay.delay = 0.001;
  EXPECT_THROW(mackey_glass_series({10, kDefaultDt, 0, 1}, {}, short_delay), qrc::InvalidArgument);
}

TEST(Henon, FirstIteratesAndAttractorBound) {
  const TimeSeries s = henon_series(5);
  EXPECT_EQ(s.values[0], 0.0);
  EXPECT_EQ(s.values[1], 1.0);
  EXPECT_DOUBLE_EQ(s.values[2], -0.4);
  const TimeSeries long_run = henon_series(100000);
  EXPECT_FALSE(long_run.truncated);
  for (double v : long_run.values) EXPECT_LE(std::abs(v), 1.5);
  EXPECT_TRUE(long_run.t.empty());
}

TEST(Henon, EscapingInitialIsTruncated) {
  const TimeSeries s = henon_series(100, 3.0, 0.0);
  EXPECT_TRUE(s.truncated);
  EXPECT_LT(s.values.size(), 100u);
}

TEST(Normalize, UnitIntervalMap) {
  const std::vector<double> s{1.0, 3.0};
  const Normalized n = normalize_unit_interval(s);
  EXPECT_EQ(n.values, (std::vector<double>{0.0, 1.0}));
  EXPECT_DOUBLE_EQ(n.map.scale, 0.5);
  EXPECT_DOUBLE_EQ(n.map.offset, -0.5);
  EXPECT_EQ(n.clamped, 0u);
}

TEST(Normalize, RoundTripAndClamp) {
  qrc::Rng rng(3);
  std::vector<double> s(200);
  for (double& v : s) v = rng.uniform(-7, 4);
  const Normalized n = normalize_unit_interval(s);
  const std::vector<double> back = denormalize(n.values, n.map);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(back[i], s[i], 1e-12);

  const std::vector<double> series{0.0, 2.0, 1.0, 5.0, -1.0};
  const Normalized partial = normalize_unit_interval(series, 3);
  EXPECT_EQ(partial.clamped, 2u);
  EXPECT_EQ(partial.values[3], 1.0);
  EXPECT_EQ(partial.values[4], 0.0);
  EXPECT_THROW(normalize_unit_interval(std::vector<double>{2.0, 2.0}), qrc::InvalidArgument);
}

TEST(Esn, ZeroInputStaysAtRest) {
  const EchoStateNetwork esn(EsnConfig{20, 0.95, 1.0, 1});
  const qrc::regression::Matrix states = esn.run(std::vector<double>(30, 0.0));
  EXPECT_EQ(states.leftCols(20).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(states.col(20).minCoeff(), 1.0);
}

TEST(Esn, SpectralRadiusRescaled) {
  for (double rho : {0.5, 0.95, 1.2}) {
    const EchoStateNetwork esn(EsnConfig{60, rho, 1.0, 7});
    EXPECT_NEAR(spectral_radius(esn.recurrent()), rho, 1e-6);
  }
}

TEST(Esn, ShortTermMemoryAtDelayOne) {
  qrc::Rng rng(9);
  std::vector<double> u(4000);
  for (double& v : u) v = rng.uniform01();
  std::vector<double> target(u.size(), 0.0);
  for (std::size_t k = 1; k < u.size(); ++k) target[k] = u[k - 1];
  const EchoStateNetwork esn(EsnConfig{100, 0.95, 1.0, 11});
  const qrc::regression::Matrix states = esn.run(u);
  const Eigen::Index washout = 500, train = 2500, test = 1000;
  const qrc::regression::Vector y = Eigen::Map<const qrc::regression::Vector>(target.data(), 4000);
  const auto w = qrc::regression::fit_linear(qrc::regression::DesignMatrix(states.middleRows(washout, train)),
                                             y.segment(washout, train));
  const qrc::regression::Vector pred = w.predict(states.bottomRows(test));
  const qrc::regression::Vector truth = y.tail(test);
  const double pc = pred.size() * pred.dot(truth) - pred.sum() * truth.sum();
  const double corr2 = pc * pc / ((pred.size() * pred.squaredNorm() - pred.sum() * pred.sum()) *
                                  (truth.size() * truth.squaredNorm() - truth.sum() * truth.sum()));
  EXPECT_GT(corr2, 0.9);
}

TEST(Esn, BaselineFitReportsNmse) {
  qrc::Rng rng(10);
  std::vector<double> u(600);
  for (double& v : u) v = rng.uniform01();
  const EsnFit fit = esn_baseline(EchoStateNetwork(EsnConfig{30, 0.9, 1.0, 2}), u, u, 100);
  EXPECT_LT(fit.train_nmse, 0.01);
  EXPECT_THROW(esn_baseline(EchoStateNetwork(EsnConfig{}), u, u, 600), qrc::InvalidArgument);
}

}  // namespace
