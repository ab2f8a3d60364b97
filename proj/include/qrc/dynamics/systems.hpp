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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qrc::dynamics {

using Vector = Eigen::VectorXd;

struct OdeSystem {
  int dimension;
  std::function<Vector(const Vector& state, double t)> derivative;
  std::map<std::string, double> params;
};

// Classical fourth-order Runge-Kutta step. Throws InvalidArgument for
// dt <= 0 and DivergenceError(0) for a non-finite derivative.
Vector rk4_step(const OdeSystem& sys, const Vector& state, double t, double dt);

struct LorenzParams {
  double a = 10.0, b = 28.0, c = 8.0 / 3.0;
};

struct RosslerParams {
  double a = 0.2, b = 0.2, c = 5.7;
};

struct MackeyGlassParams {
  double beta = 0.2, gamma = 0.1, n = 10.0;
};

OdeSystem lorenz(const LorenzParams& p = {});
OdeSystem rossler(const RosslerParams& p = {});

struct TimeSeries {
  std::vector<double> t;       // empty for maps
  std::vector<double> values;
  bool truncated = false;      // set when a map escaped and was cut short
};

inline constexpr double kDefaultDt = 0.02;

// Sampling of a continuous system: `transient` integration steps are
// discarded, then one value is recorded every `sample_every` steps.
struct SamplingOptions {
  std::size_t length = 1000;
  double dt = kDefaultDt;
  std::size_t transient = 5000;
  std::size_t sample_every = 1;
};

// x component of the Lorenz system.
TimeSeries lorenz_series(const SamplingOptions& opts, const LorenzParams& p = {},
                         const Vector& initial = Vector::Ones(3));

// x component of the Rossler system.
TimeSeries rossler_series(const SamplingOptions& opts, const RosslerParams& p = {},
                          const Vector& initial = Vector::Ones(3));

// dx/dt = beta x(t - delay) / (1 + x(t - delay)^n) - gamma x(t), integrated
// by RK4 on the dt grid. Delayed values at off-grid stage times are linearly
// interpolated between stored grid points; times before 0 use `history`.
struct DelayOptions {
  double delay = 17.0;
  std::function<double(double t)> history = [](double) { return 1.2; };
};

TimeSeries mackey_glass_series(const SamplingOptions& opts, const MackeyGlassParams& p = {},
                               const DelayOptions& delay = {});

// x_{t+1} = 1 - 1.4 x_t^2 + 0.3 x_{t-1}, started from (x_0, x_{-1}).
// Stops early with `truncated` set once |x| exceeds 10.
TimeSeries henon_series(std::size_t length, double x0 = 0.0, double x_prev = 0.0);

inline constexpr double kHenonEscape = 10.0;

}  // namespace qrc::dynamics
