// Copyright 2026 The ocusim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA kernel variants. One __m256d holds two complex<double> values in
// interleaved [re0, im0, re1, im1] layout, which matches the in-memory layout
// of std::complex<double> arrays. This translation unit is compiled with
// -mavx2 -mfma; callers must route through kern::active() which only selects
// these kernels when the CPU reports avx2 and fma.

#include "ocusim/kernels.hpp"

#if defined(OCUSIM_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__))
#define OCUSIM_AVX2_COMPILED 1
#include <immintrin.h>

#include <cstring>
#endif

namespace ocusim::kern {

#ifdef OCUSIM_AVX2_COMPILED

namespace {

// c_vec += a_scalar * b_vec for two interleaved complex lanes.
// re = ar*br - ai*bi, im = ar*bi + ai*br.
inline __m256d cplx_fma(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);  // [im0, re0, im1, re1]
  acc = _mm256_fmadd_pd(ar, b, acc);
  return _mm256_addsub_pd(acc, _mm256_mul_pd(ai, bswap));
}

void gemm_nn_avx2(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
                  const cxd* b, cxd* c, bool accumulate) {
  if (!accumulate) {
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cxd));
  }
  const double* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < m; ++i) {
    const cxd* arow = a + i * k;
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t t = 0; t < k; ++t) {
      const __m256d ar = _mm256_set1_pd(arow[t].real());
      const __m256d ai = _mm256_set1_pd(arow[t].imag());
      const double* brow = bd + 2 * t * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cplx_fma(cv, ar, ai, bv));
      }
      if (j < n) {  // odd tail, one complex element
        const cxd av = arow[t];
        cxd* ctail = reinterpret_cast<cxd*>(crow) + j;
        *ctail += av * b[t * n + j];
      }
    }
  }
}

// Accumulate a_row · conj(b_row) over two interleaved lanes.
// re += ar*br + ai*bi, im += ai*br - ar*bi.
// Keeps two separate accumulators and resolves the lane algebra at the end.
void gemm_nh_avx2(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
                  const cxd* b, cxd* c, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = reinterpret_cast<const double*>(a + i * k);
    cxd* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* brow = reinterpret_cast<const double*>(b + j * k);
      __m256d p = _mm256_setzero_pd();  // Σ a ⊙ b        -> [ar·br, ai·bi]
      __m256d q = _mm256_setzero_pd();  // Σ a ⊙ swap(b)  -> [ar·bi, ai·br]
      std::size_t t = 0;
      for (; t + 2 <= k; t += 2) {
        const __m256d av = _mm256_loadu_pd(arow + 2 * t);
        const __m256d bv = _mm256_loadu_pd(brow + 2 * t);
        const __m256d bswap = _mm256_permute_pd(bv, 0b0101);
        p = _mm256_fmadd_pd(av, bv, p);
        q = _mm256_fmadd_pd(av, bswap, q);
      }
      alignas(32) double pd[4], qd[4];
      _mm256_store_pd(pd, p);
      _mm256_store_pd(qd, q);
      double re = pd[0] + pd[1] + pd[2] + pd[3];
      double im = (qd[1] - qd[0]) + (qd[3] - qd[2]);
      for (; t < k; ++t) {  // odd tail
        const cxd av = a[i * k + t];
        const cxd bv = b[j * k + t];
        re += av.real() * bv.real() + av.imag() * bv.imag();
        im += av.imag() * bv.real() - av.real() * bv.imag();
      }
      const cxd acc{re, im};
      if (accumulate) {
        crow[j] += acc;
      } else {
        crow[j] = acc;
      }
    }
  }
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops{"avx2", &gemm_nn_avx2, &gemm_nh_avx2};
  return &ops;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif  // OCUSIM_AVX2_COMPILED

}  // namespace ocusim::kern
