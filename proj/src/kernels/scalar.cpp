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

#include "kernels_internal.hpp"

namespace qrc::kernels::detail {

void gemm_scalar(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                 std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    cplx* cj = c.data() + j * m;
    for (std::size_t i = 0; i < m; ++i) cj[i] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx s = b[j * k + p];
      const cplx* ap = a.data() + p * m;
      for (std::size_t i = 0; i < m; ++i) cj[i] += ap[i] * s;
    }
  }
}

void gemm_adjoint_scalar(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                         std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    cplx* cj = c.data() + j * m;
    for (std::size_t i = 0; i < m; ++i) cj[i] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      // b is (n x k): element (j, p) sits at p * n + j
      const cplx s = std::conj(b[p * n + j]);
      const cplx* ap = a.data() + p * m;
      for (std::size_t i = 0; i < m; ++i) cj[i] += ap[i] * s;
    }
  }
}

void diag_product_adjoint_scalar(std::span<const cplx> a, std::span<const cplx> b,
                                 std::span<double> out, std::size_t m, std::size_t k) {
  for (std::size_t i = 0; i < m; ++i) out[i] = 0.0;
  for (std::size_t p = 0; p < k; ++p) {
    const cplx* ap = a.data() + p * m;
    const cplx* bp = b.data() + p * m;
    for (std::size_t i = 0; i < m; ++i) {
      out[i] += ap[i].real() * bp[i].real() + ap[i].imag() * bp[i].imag();
    }
  }
}

void z_expectations_scalar(std::span<const double> p, int n_qubits, std::span<double> out) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  for (int q = 0; q < n_qubits; ++q) {
    const std::size_t mask = std::size_t{1} << (n_qubits - 1 - q);
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) acc += (i & mask) ? -p[i] : p[i];
    out[q] = acc;
  }
}

}  // namespace qrc::kernels::detail
