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

#include "qrc/dynamics/normalize.hpp"

#include <algorithm>
#include <cmath>

#include "qrc/errors.hpp"

namespace qrc::dynamics {

AffineMap fit_unit_interval(std::span<const double> segment) {
  if (segment.empty()) throw InvalidArgument("cannot normalize an empty series");
  const auto [lo, hi] = std::minmax_element(segment.begin(), segment.end());
  if (!std::isfinite(*lo) || !std::isfinite(*hi)) throw InvalidArgument("series has non-finite values");
  if (*hi == *lo) throw InvalidArgument("cannot normalize a constant series");
  const double scale = 1.0 / (*hi - *lo);
  return {scale, -*lo * scale};
}

Normalized normalize_with(std::span<const double> series, const AffineMap& map) {
  Normalized out;
  out.map = map;
  out.values.reserve(series.size());
  for (double v : series) {
    double y = map.apply(v);
    if (y < 0.0 || y > 1.0) {
      y = std::clamp(y, 0.0, 1.0);
      ++out.clamped;
    }
    out.values.push_back(y);
  }
  return out;
}

Normalized normalize_unit_interval(std::span<const double> series, std::size_t fit_length) {
  if (fit_length > series.size()) throw InvalidArgument("fit segment longer than series");
  const std::size_t n = fit_length == 0 ? series.size() : fit_length;
  return normalize_with(series, fit_unit_interval(series.first(n)));
}

std::vector<double> denormalize(std::span<const double> values, const AffineMap& map) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(map.invert(v));
  return out;
}

}  // namespace qrc::dynamics
