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

#include <cstddef>
#include <span>
#include <vector>

namespace qrc::dynamics {

// y = scale * x + offset.
struct AffineMap {
  double scale = 1.0;
  double offset = 0.0;

  double apply(double x) const { return scale * x + offset; }
  double invert(double y) const { return (y - offset) / scale; }
};

// Min-max map of `segment` onto [0, 1]. Throws InvalidArgument for an empty
// or constant segment.
AffineMap fit_unit_interval(std::span<const double> segment);

struct Normalized {
  std::vector<double> values;
  AffineMap map;
  std::size_t clamped = 0;  // values pushed back into [0, 1]
};

// Applies `map` and clamps to [0, 1], counting clamped values.
Normalized normalize_with(std::span<const double> series, const AffineMap& map);

// Fits the map on the first `fit_length` values (all when 0) and applies it
// to the whole series.
Normalized normalize_unit_interval(std::span<const double> series, std::size_t fit_length = 0);

std::vector<double> denormalize(std::span<const double> values, const AffineMap& map);

}  // namespace qrc::dynamics
