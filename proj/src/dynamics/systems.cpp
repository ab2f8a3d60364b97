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

#include "qrc/dynamics/systems.hpp"

#include <cmath>

#include "qrc/errors.hpp"

namespace qrc::dynamics {

Vector rk4_step(const OdeSystem& sys, const Vector& state, double t, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  if (state.size() != sys.dimension) throw DimensionMismatch("state size differs from system dimension");
  const Vector k1 = sys.derivative(state, t);
  const Vector k2 = sys.derivative(state + 0.5 * dt * k1, t + 0.5 * dt);
  const Vector k3 = sys.derivative(state + 0.5 * dt * k2, t + 0.5 * dt);
  const Vector k4 = sys.derivative(state + dt * k3, t + dt);
  if (!k1.allFinite() || !k2.allFinite() || !k3.allFinite() || !k4.allFinite())
    throw DivergenceError("non-finite derivative", 0);
  return state + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

OdeSystem lorenz(const LorenzParams& p) {
  return {3,
          [p](const Vector& s, double) {
            Vector d(3);
            d << p.a * (s[1] - s[0]), s[0] * (p.b - s[2]) - s[1], s[0] * s[1] - p.c * s[2];
            return d;
          },
          {{"a", p.a}, {"b", p.b}, {"c", p.c}}};
}

OdeSystem rossler(const RosslerParams& p) {
  return {3,
          [p](const Vector& s, double) {
            Vector d(3);
            d << -s[1] - s[2], s[0] + p.a * s[1], p.b + s[2] * (s[0] - p.c);
            return d;
          },
          {{"a", p.a}, {"b", p.b}, {"c", p.c}}};
}

namespace {

void check_sampling(const SamplingOptions& o) {
  if (o.length == 0) throw InvalidArgument("series length must be positive");
  if (!(o.dt > 0.0)) throw InvalidArgument("dt must be positive");
  if (o.sample_every == 0) throw InvalidArgument("sample_every must be positive");
}

TimeSeries integrate_x(const OdeSystem& sys, const SamplingOptions& o, const Vector& initial) {
  check_sampling(o);
  if (initial.size() != sys.dimension) throw DimensionMismatch("initial state size differs from system dimension");
  TimeSeries out;
  out.t.reserve(o.length);
  out.values.reserve(o.length);
  Vector s = initial;
  std::size_t step = 0;
  auto advance = [&] {
    s = rk4_step(sys, s, static_cast<double>(step) * o.dt, o.dt);
    ++step;
    if (!s.allFinite()) throw DivergenceError("integration produced a non-finite state", static_cast<long>(step));
  };
  for (std::size_t i = 0; i < o.transient; ++i) advance();
  for (std::size_t k = 0; k < o.length; ++k) {
    if (k > 0)
      for (std::size_t j = 0; j < o.sample_every; ++j) advance();
    out.t.push_back(static_cast<double>(step) * o.dt);
    out.values.push_back(s[0]);
  }
  return out;
}

}  // namespace

TimeSeries lorenz_series(const SamplingOptions& opts, const LorenzParams& p, const Vector& initial) {
  return integrate_x(lorenz(p), opts, initial);
}

TimeSeries rossler_series(const SamplingOptions& opts, const RosslerParams& p, const Vector& initial) {
  return integrate_x(rossler(p), opts, initial);
}

TimeSeries mackey_glass_series(const SamplingOptions& o, const MackeyGlassParams& p, const DelayOptions& d) {
  check_sampling(o);
  if (!(d.delay >= o.dt)) throw InvalidArgument("delay must be at least one integration step");
  if (!d.history) throw InvalidArgument("missing history function");

  // grid[i] = x(i dt) for i >= 0.
  std::vector<double> grid;
  const std::size_t total = o.transient + (o.length - 1) * o.sample_every + 1;
  grid.reserve(total);
  grid.push_back(d.history(0.0));
  if (!(grid[0] > 0.0)) throw InvalidArgument("history must be positive");

  auto past = [&](double time) {
    if (time <= 0.0) return d.history(time);
    const double pos = time / o.dt;
    auto i = static_cast<std::size_t>(std::floor(pos));
    if (i + 1 >= grid.size()) {
      if (i < grid.size() && pos - static_cast<double>(i) < 1e-9) return grid[i];
      throw InvalidArgument("insufficient history for delayed lookup");
    }
    const double frac = pos - static_cast<double>(i);
    return (1.0 - frac) * grid[i] + frac * grid[i + 1];
  };
  auto f = [&](double x, double x_delayed) {
    return p.beta * x_delayed / (1.0 + std::pow(x_delayed, p.n)) - p.gamma * x;
  };

  for (std::size_t step = 0; grid.size() < total; ++step) {
    const double t = static_cast<double>(step) * o.dt;
    const double x = grid.back();
    const double h = o.dt;
    const double dl0 = past(t - d.delay), dl1 = past(t + 0.5 * h - d.delay), dl2 = past(t + h - d.delay);
    const double k1 = f(x, dl0);
    const double k2 = f(x + 0.5 * h * k1, dl1);
    const double k3 = f(x + 0.5 * h * k2, dl1);
    const double k4 = f(x + h * k3, dl2);
    const double next = x + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!std::isfinite(next)) throw DivergenceError("integration produced a non-finite state", static_cast<long>(step));
    grid.push_back(next);
  }

  TimeSeries out;
  for (std::size_t k = 0; k < o.length; ++k) {
    const std::size_t i = o.transient + k * o.sample_every;
    out.t.push_back(static_cast<double>(i) * o.dt);
    out.values.push_back(grid[i]);
  }
  return out;
}

TimeSeries henon_series(std::size_t length, double x0, double x_prev) {
  if (length == 0) throw InvalidArgument("series length must be positive");
  TimeSeries out;
  out.values.reserve(length);
  double cur = x0, prev = x_prev;
  out.values.push_back(cur);
  while (out.values.size() < length) {
    const double next = 1.0 - 1.4 * cur * cur + 0.3 * prev;
    if (!(std::abs(next) <= kHenonEscape)) {
      out.truncated = true;
      break;
    }
    prev = cur;
    cur = next;
    out.values.push_back(cur);
  }
  return out;
}

}  // namespace qrc::dynamics
