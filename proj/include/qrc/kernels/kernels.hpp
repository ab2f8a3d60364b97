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

// Data-parallel inner loops of the density-matrix simulator.
//
// Every kernel exists as a scalar reference implementation and, where the
// build and the CPU allow it, an AVX2+FMA variant. The variant is picked
// once per process by active_kernels(); tests hold each variant to the
// scalar reference.
//
// All matrices are dense, column-major, std::complex<double> with the
// leading dimension equal to the row count (Eigen's default layout).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qrc::kernels {

using cplx = std::complex<double>;

// c (m x n) = a (m x k) * b (k x n)
using GemmFn = void (*)(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                        std::size_t m, std::size_t k, std::size_t n);

// c (m x n) = a (m x k) * b^dagger, with b stored as (n x k)
using GemmAdjointFn = GemmFn;

// out[i] = Re sum_j a(i,j) * conj(b(i,j)) for (m x k) operands, i.e. the
// real part of diag(a * b^dagger).
using DiagProductFn = void (*)(std::span<const cplx> a, std::span<const cplx> b,
                               std::span<double> out, std::size_t m, std::size_t k);

// out[q] = sum_i p[i] * (1 - 2 * bit_q(i)) where qubit 0 is the most
// significant bit of the basis index i; p has length 2^n_qubits.
using ZExpectationsFn = void (*)(std::span<const double> p, int n_qubits, std::span<double> out);

struct KernelSet {
  std::string_view name;
  GemmFn gemm;
  GemmAdjointFn gemm_adjoint;
  DiagProductFn diag_product_adjoint;
  ZExpectationsFn z_expectations;
};

const KernelSet& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelSet* avx2_kernels();

// Chosen on first call: AVX2 when available, scalar otherwise. The
// environment variable QRC_KERNELS=scalar forces the reference path.
const KernelSet& active_kernels();

}  // namespace qrc::kernels
