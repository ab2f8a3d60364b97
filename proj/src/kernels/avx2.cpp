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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace qrc::kernels::detail {
namespace {

// (a_re + i a_im) * (s_re + i s_im) for two interleaved complex values.
inline __m256d cmul(__m256d a, __m256d s_re, __m256d s_im) {
  const __m256d a_swapped = _mm256_permute_pd(a, 0b0101);
  return _mm256_fmaddsub_pd(a, s_re, _mm256_mul_pd(a_swapped, s_im));
}

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// c_col = sum_p a_col(p) * s(p), with s supplied by a functor.
template <class ScalarAt>
void gemm_columns(const cplx* a, cplx* c, std::size_t m, std::size_t k, std::size_t n,
                  ScalarAt scalar_at) {
  const std::size_t m_vec = m & ~std::size_t{1};
  for (std::size_t j = 0; j < n; ++j) {
    cplx* cj = c + j * m;
    for (std::size_t i = 0; i < m; ++i) cj[i] = 0.0;
    std::size_t p = 0;
    for (; p + 4 <= k; p += 4) {
      const cplx s0 = scalar_at(j, p), s1 = scalar_at(j, p + 1);
      const cplx s2 = scalar_at(j, p + 2), s3 = scalar_at(j, p + 3);
      const __m256d r0 = _mm256_set1_pd(s0.real()), i0 = _mm256_set1_pd(s0.imag());
      const __m256d r1 = _mm256_set1_pd(s1.real()), i1 = _mm256_set1_pd(s1.imag());
      const __m256d r2 = _mm256_set1_pd(s2.real()), i2 = _mm256_set1_pd(s2.imag());
      const __m256d r3 = _mm256_set1_pd(s3.real()), i3 = _mm256_set1_pd(s3.imag());
      const double* a0 = as_doubles(a + p * m);
      const double* a1 = as_doubles(a + (p + 1) * m);
      const double* a2 = as_doubles(a + (p + 2) * m);
      const double* a3 = as_doubles(a + (p + 3) * m);
      double* cd = as_doubles(cj);
      for (std::size_t i = 0; i < m_vec; i += 2) {
        __m256d acc = _mm256_loadu_pd(cd + 2 * i);
        acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(a0 + 2 * i), r0, i0));
        acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(a1 + 2 * i), r1, i1));
        acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(a2 + 2 * i), r2, i2));
        acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(a3 + 2 * i), r3, i3));
        _mm256_storeu_pd(cd + 2 * i, acc);
      }
      for (std::size_t i = m_vec; i < m; ++i) {
        cj[i] += a[p * m + i] * s0 + a[(p + 1) * m + i] * s1 + a[(p + 2) * m + i] * s2 +
                 a[(p + 3) * m + i] * s3;
      }
    }
    for (; p < k; ++p) {
      const cplx s = scalar_at(j, p);
      const __m256d r = _mm256_set1_pd(s.real()), im = _mm256_set1_pd(s.imag());
      const double* ap = as_doubles(a + p * m);
      double* cd = as_doubles(cj);
      for (std::size_t i = 0; i < m_vec; i += 2) {
        const __m256d acc = _mm256_loadu_pd(cd + 2 * i);
        _mm256_storeu_pd(cd + 2 * i, _mm256_add_pd(acc, cmul(_mm256_loadu_pd(ap + 2 * i), r, im)));
      }
      for (std::size_t i = m_vec; i < m; ++i) cj[i] += a[p * m + i] * s;
    }
  }
}

}  // namespace

void gemm_avx2(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
               std::size_t m, std::size_t k, std::size_t n) {
  const cplx* bd = b.data();
  gemm_columns(a.data(), c.data(), m, k, n,
               [bd, k](std::size_t j, std::size_t p) { return bd[j * k + p]; });
}

void gemm_adjoint_avx2(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                       std::size_t m, std::size_t k, std::size_t n) {
  const cplx* bd = b.data();
  gemm_columns(a.data(), c.data(), m, k, n,
               [bd, n](std::size_t j, std::size_t p) { return std::conj(bd[p * n + j]); });
}

void diag_product_adjoint_avx2(std::span<const cplx> a, std::span<const cplx> b,
                               std::span<double> out, std::size_t m, std::size_t k) {
  const double* ad = as_doubles(a.data());
  const double* bd = as_doubles(b.data());
  const std::size_t m_vec = m & ~std::size_t{3};
  for (std::size_t i = 0; i < m_vec; i += 4) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (std::size_t p = 0; p < k; ++p) {
      const std::size_t off = 2 * (p * m + i);
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(ad + off), _mm256_loadu_pd(bd + off), acc0);
      acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(ad + off + 4), _mm256_loadu_pd(bd + off + 4), acc1);
    }
    // hadd yields rows (i, i+2, i+1, i+3); restore natural order.
    const __m256d sums = _mm256_permute4x64_pd(_mm256_hadd_pd(acc0, acc1), 0b11011000);
    _mm256_storeu_pd(out.data() + i, sums);
  }
  for (std::size_t i = m_vec; i < m; ++i) {
    double acc = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx x = a[p * m + i], y = b[p * m + i];
      acc += x.real() * y.real() + x.imag() * y.imag();
    }
    out[i] = acc;
  }
}

void z_expectations_avx2(std::span<const double> p, int n_qubits, std::span<double> out) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (dim < 4) {
    z_expectations_scalar(p, n_qubits, out);
    return;
  }
  const double* pd = p.data();
  for (int q = 0; q < n_qubits; ++q) {
    const int bit = n_qubits - 1 - q;
    __m256d acc = _mm256_setzero_pd();
    if (bit >= 2) {
      const std::size_t mask = std::size_t{1} << bit;
      for (std::size_t i = 0; i < dim; i += 4) {
        const __m256d v = _mm256_loadu_pd(pd + i);
        acc = (i & mask) ? _mm256_sub_pd(acc, v) : _mm256_add_pd(acc, v);
      }
    } else {
      const __m256d sign = bit == 0 ? _mm256_setr_pd(1.0, -1.0, 1.0, -1.0)
                                    : _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
      for (std::size_t i = 0; i < dim; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(pd + i), sign, acc);
      }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    out[q] = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  }
}

}  // namespace qrc::kernels::detail
