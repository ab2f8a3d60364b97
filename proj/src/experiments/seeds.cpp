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

#include "qrc/experiments/seeds.hpp"

#include "qrc/random.hpp"

namespace qrc::experiments {

SubSeeds seed_everything(std::uint64_t global_seed) {
  return {derive_seed(global_seed, kSubSeedNames[0]), derive_seed(global_seed, kSubSeedNames[1]),
          derive_seed(global_seed, kSubSeedNames[2]), derive_seed(global_seed, kSubSeedNames[3])};
}

}  // namespace qrc::experiments
