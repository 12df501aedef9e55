// Copyright 2026 The vocap Authors.
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
//
// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64; detail::avx2::supported() gates dispatch at
// runtime so the binary still runs on machines without AVX2.

#include "vocap/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define VOCAP_X86 1
#include <immintrin.h>
#else
#define VOCAP_X86 0
#endif

namespace vocap::kernels::detail::avx2 {

#if VOCAP_X86

bool supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

static inline float hsum256_ps(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  __m128 sh = _mm_movehdup_ps(lo);
  __m128 sums = _mm_add_ps(lo, sh);
  sh = _mm_movehl_ps(sh, sums);
  sums = _mm_add_ss(sums, sh);
  return _mm_cvtss_f32(sums);
}

static inline double hsum256_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

float dot_f32(const float* a, const float* b, size_t n) {
  __m256 acc0 = _mm256_setzero_ps();
  __m256 acc1 = _mm256_setzero_ps();
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
  }
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
  }
  float sum = hsum256_ps(_mm256_add_ps(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double dot_f64(const double* a, const double* b, size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double sum = hsum256_pd(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_f32(float a, const float* x, float* y, size_t n) {
  const __m256 va = _mm256_set1_ps(a);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(y + i, _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void axpy_f64(double a, const double* x, double* y, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

float reduce_max_f32(const float* x, size_t n) {
  size_t i = 0;
  float m = x[0];
  if (n >= 8) {
    __m256 vm = _mm256_loadu_ps(x);
    for (i = 8; i + 8 <= n; i += 8) vm = _mm256_max_ps(vm, _mm256_loadu_ps(x + i));
    __m128 lo = _mm_max_ps(_mm256_castps256_ps128(vm), _mm256_extractf128_ps(vm, 1));
    lo = _mm_max_ps(lo, _mm_movehl_ps(lo, lo));
    lo = _mm_max_ss(lo, _mm_movehdup_ps(lo));
    m = _mm_cvtss_f32(lo);
  }
  for (; i < n; ++i) m = x[i] > m ? x[i] : m;
  return m;
}

double reduce_max_f64(const double* x, size_t n) {
  size_t i = 0;
  double m = x[0];
  if (n >= 4) {
    __m256d vm = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
    __m128d lo = _mm_max_pd(_mm256_castpd256_pd128(vm), _mm256_extractf128_pd(vm, 1));
    lo = _mm_max_sd(lo, _mm_unpackhi_pd(lo, lo));
    m = _mm_cvtsd_f64(lo);
  }
  for (; i < n; ++i) m = x[i] > m ? x[i] : m;
  return m;
}

// 2x4 register tile over the shared dim. The candidate block (rows of b)
// is walked in L2-sized chunks by the caller loop so it stays hot across
// all rows of a.
void matmul_nt_f32(const float* a, size_t m, const float* b, size_t n, size_t dim, float* c) {
  constexpr size_t kBlockN = 256;  // 256 rows x 64 dims x 4B = 64 KiB
  for (size_t jb = 0; jb < n; jb += kBlockN) {
    const size_t jend = jb + kBlockN < n ? jb + kBlockN : n;
    size_t i = 0;
    for (; i + 2 <= m; i += 2) {
      const float* a0 = a + i * dim;
      const float* a1 = a0 + dim;
      size_t j = jb;
      for (; j + 4 <= jend; j += 4) {
        const float* b0 = b + j * dim;
        const float* b1 = b0 + dim;
        const float* b2 = b1 + dim;
        const float* b3 = b2 + dim;
        __m256 c00 = _mm256_setzero_ps(), c01 = _mm256_setzero_ps();
        __m256 c02 = _mm256_setzero_ps(), c03 = _mm256_setzero_ps();
        __m256 c10 = _mm256_setzero_ps(), c11 = _mm256_setzero_ps();
        __m256 c12 = _mm256_setzero_ps(), c13 = _mm256_setzero_ps();
        size_t d = 0;
        for (; d + 8 <= dim; d += 8) {
          const __m256 va0 = _mm256_loadu_ps(a0 + d);
          const __m256 va1 = _mm256_loadu_ps(a1 + d);
          const __m256 vb0 = _mm256_loadu_ps(b0 + d);
          const __m256 vb1 = _mm256_loadu_ps(b1 + d);
          const __m256 vb2 = _mm256_loadu_ps(b2 + d);
          const __m256 vb3 = _mm256_loadu_ps(b3 + d);
          c00 = _mm256_fmadd_ps(va0, vb0, c00);
          c01 = _mm256_fmadd_ps(va0, vb1, c01);
          c02 = _mm256_fmadd_ps(va0, vb2, c02);
          c03 = _mm256_fmadd_ps(va0, vb3, c03);
          c10 = _mm256_fmadd_ps(va1, vb0, c10);
          c11 = _mm256_fmadd_ps(va1, vb1, c11);
          c12 = _mm256_fmadd_ps(va1, vb2, c12);
          c13 = _mm256_fmadd_ps(va1, vb3, c13);
        }
        float s00 = hsum256_ps(c00), s01 = hsum256_ps(c01);
        float s02 = hsum256_ps(c02), s03 = hsum256_ps(c03);
        float s10 = hsum256_ps(c10), s11 = hsum256_ps(c11);
        float s12 = hsum256_ps(c12), s13 = hsum256_ps(c13);
        for (; d < dim; ++d) {
          s00 += a0[d] * b0[d];
          s01 += a0[d] * b1[d];
          s02 += a0[d] * b2[d];
          s03 += a0[d] * b3[d];
          s10 += a1[d] * b0[d];
          s11 += a1[d] * b1[d];
          s12 += a1[d] * b2[d];
          s13 += a1[d] * b3[d];
        }
        float* c0 = c + i * n + j;
        float* c1 = c0 + n;
        c0[0] = s00, c0[1] = s01, c0[2] = s02, c0[3] = s03;
        c1[0] = s10, c1[1] = s11, c1[2] = s12, c1[3] = s13;
      }
      for (; j < jend; ++j) {
        c[i * n + j] = dot_f32(a0, b + j * dim, dim);
        c[(i + 1) * n + j] = dot_f32(a1, b + j * dim, dim);
      }
    }
    for (; i < m; ++i) {
      for (size_t j = jb; j < jend; ++j) {
        c[i * n + j] = dot_f32(a + i * dim, b + j * dim, dim);
      }
    }
  }
}

void matmul_nt_f64(const double* a, size_t m, const double* b, size_t n, size_t dim, double* c) {
  constexpr size_t kBlockN = 128;
  for (size_t jb = 0; jb < n; jb += kBlockN) {
    const size_t jend = jb + kBlockN < n ? jb + kBlockN : n;
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = jb; j < jend; ++j) {
        c[i * n + j] = dot_f64(a + i * dim, b + j * dim, dim);
      }
    }
  }
}

#else  // !VOCAP_X86

bool supported() { return false; }

float dot_f32(const float* a, const float* b, size_t n) { return scalar::dot_f32(a, b, n); }
double dot_f64(const double* a, const double* b, size_t n) { return scalar::dot_f64(a, b, n); }
void axpy_f32(float a, const float* x, float* y, size_t n) { scalar::axpy_f32(a, x, y, n); }
void axpy_f64(double a, const double* x, double* y, size_t n) { scalar::axpy_f64(a, x, y, n); }
float reduce_max_f32(const float* x, size_t n) { return scalar::reduce_max_f32(x, n); }
double reduce_max_f64(const double* x, size_t n) { return scalar::reduce_max_f64(x, n); }
void matmul_nt_f32(const float* a, size_t m, const float* b, size_t n, size_t dim, float* c) {
  scalar::matmul_nt_f32(a, m, b, n, dim, c);
}
void matmul_nt_f64(const double* a, size_t m, const double* b, size_t n, size_t dim, double* c) {
  scalar::matmul_nt_f64(a, m, b, n, dim, c);
}

#endif  // VOCAP_X86

}  // namespace vocap::kernels::detail::avx2
