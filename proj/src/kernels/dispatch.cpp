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

#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace qrc::kernels {

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", detail::gemm_scalar, detail::gemm_adjoint_scalar,
                             detail::diag_product_adjoint_scalar, detail::z_expectations_scalar};
  return set;
}

const KernelSet* avx2_kernels() {
#ifdef QRC_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const KernelSet set{"avx2", detail::gemm_avx2, detail::gemm_adjoint_avx2,
                             detail::diag_product_adjoint_avx2, detail::z_expectations_avx2};
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = []() -> const KernelSet& {
    const char* forced = std::getenv("QRC_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const KernelSet* fast = avx2_kernels()) return *fast;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace qrc::kernels
