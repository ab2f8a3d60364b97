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
#include <string_view>

namespace qrc::experiments {

// Independent streams derived from the global seed. Each is
// derive_seed(global, name), so a component that draws more numbers never
// shifts another component's stream.
struct SubSeeds {
  std::uint64_t circuit;    // QELM circuits, QCL initial parameters
  std::uint64_t couplings;  // Ising couplings J_ij
  std::uint64_t dataset;    // training sets and input streams
  std::uint64_t esn;        // echo state network weights
};

inline constexpr std::array<std::string_view, 4> kSubSeedNames{"circuit", "couplings", "dataset", "esn"};

SubSeeds seed_everything(std::uint64_t global_seed);

}  // namespace qrc::experiments
