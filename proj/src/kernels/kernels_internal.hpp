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

#include "qrc/kernels/kernels.hpp"

namespace qrc::kernels::detail {

void gemm_scalar(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                 std::size_t m, std::size_t k, std::size_t n);
void gemm_adjoint_scalar(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                         std::size_t m, std::size_t k, std::size_t n);
void diag_product_adjoint_scalar(std::span<const cplx> a, std::span<const cplx> b,
                                 std::span<double> out, std::size_t m, std::size_t k);
void z_expectations_scalar(std::span<const double> p, int n_qubits, std::span<double> out);

#ifdef QRC_HAVE_AVX2
void gemm_avx2(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
               std::size_t m, std::size_t k, std::size_t n);
void gemm_adjoint_avx2(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                       std::size_t m, std::size_t k, std::size_t n);
void diag_product_adjoint_avx2(std::span<const cplx> a, std::span<const cplx> b,
                               std::span<double> out, std::size_t m, std::size_t k);
void z_expectations_avx2(std::span<const double> p, int n_qubits, std::span<double> out);
#endif

}  // namespace qrc::kernels::detail
