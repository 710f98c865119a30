// Copyright 2026 The qnot Authors
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

#include "qnot/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define QNOT_HAVE_AVX2_KERNELS 1
#define QNOT_TARGET_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace qnot::kernels {

#if defined(QNOT_HAVE_AVX2_KERNELS)
namespace {

// std::complex<double> is layout-compatible with double[2], so one __m256d
// holds two complex numbers as [re0, im0, re1, im1].
QNOT_TARGET_AVX2 inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

QNOT_TARGET_AVX2 inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

QNOT_TARGET_AVX2 inline void lanes(__m256d v, double out[4]) { _mm256_storeu_pd(out, v); }

// Accumulates straight = a*b (lane-wise) and swapped = a*swap(b), from which
// both the conjugated and the plain dot product are read off.
QNOT_TARGET_AVX2 void dot_accumulate(const cplx* a, const cplx* b, std::size_t n, __m256d& straight,
                                     __m256d& swapped, std::size_t& done) {
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  __m256d w0 = _mm256_setzero_pd();
  __m256d w1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = load2(a + k);
    const __m256d b0 = load2(b + k);
    const __m256d a1 = load2(a + k + 2);
    const __m256d b1 = load2(b + k + 2);
    s0 = _mm256_fmadd_pd(a0, b0, s0);
    s1 = _mm256_fmadd_pd(a1, b1, s1);
    w0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), w0);
    w1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), w1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d a0 = load2(a + k);
    const __m256d b0 = load2(b + k);
    s0 = _mm256_fmadd_pd(a0, b0, s0);
    w0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), w0);
  }
  straight = _mm256_add_pd(s0, s1);
  swapped = _mm256_add_pd(w0, w1);
  done = k;
}

QNOT_TARGET_AVX2 cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d straight;
  __m256d swapped;
  std::size_t k = 0;
  dot_accumulate(a, b, n, straight, swapped, k);
  double s[4];
  double w[4];
  lanes(straight, s);
  lanes(swapped, w);
  // re: ar*br + ai*bi, im: ar*bi - ai*br
  double re = (s[0] + s[1]) + (s[2] + s[3]);
  double im = (w[0] - w[1]) + (w[2] - w[3]);
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

QNOT_TARGET_AVX2 cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d straight;
  __m256d swapped;
  std::size_t k = 0;
  dot_accumulate(a, b, n, straight, swapped, k);
  double s[4];
  double w[4];
  lanes(straight, s);
  lanes(swapped, w);
  double re = (s[0] - s[1]) + (s[2] - s[3]);
  double im = (w[0] + w[1]) + (w[2] + w[3]);
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() - a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() + a[k].imag() * b[k].real();
  }
  return {re, im};
}

QNOT_TARGET_AVX2 void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d cross = _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101));
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, cross);
    store2(y + k, _mm256_add_pd(load2(y + k), prod));
  }
  for (; k < n; ++k) {
    y[k] += alpha * x[k];
  }
}

QNOT_TARGET_AVX2 double norm2_avx2(const cplx* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v0 = load2(a + k);
    const __m256d v1 = load2(a + k + 2);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d v0 = load2(a + k);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
  }
  double s[4];
  lanes(_mm256_add_pd(acc0, acc1), s);
  double res = (s[0] + s[1]) + (s[2] + s[3]);
  for (; k < n; ++k) {
    res += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  }
  return res;
}

QNOT_TARGET_AVX2 void gemv_avx2(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x,
                                cplx* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    y[r] = dotu_avx2(a + r * cols, x, cols);
  }
}

}  // namespace

const Table* avx2_table() noexcept {
  static const Table table{dotc_avx2, dotu_avx2, axpy_avx2, norm2_avx2, gemv_avx2};
  return &table;
}

bool cpu_has_avx2() noexcept {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#else

const Table* avx2_table() noexcept { return nullptr; }
bool cpu_has_avx2() noexcept { return false; }

#endif

}  // namespace qnot::kernels
