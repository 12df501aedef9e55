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
// Arithmetic kernels behind the softmax losses, the top-k index build and
// the throughput benchmark. Every kernel has a scalar reference
// implementation and an AVX2/FMA variant; the active one is picked once at
// runtime from CPUID (override with VOCAP_ISA=scalar|avx2). The two
// variants are equivalence-tested against each other in test_kernels.

#ifndef VOCAP_KERNELS_HPP_
#define VOCAP_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

namespace vocap::kernels {

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);

// Selected once on first use: AVX2 when the CPU has AVX2+FMA, else scalar.
Isa active_isa();

// Test hook; also applied when the VOCAP_ISA environment variable is set.
void set_active_isa(Isa isa);

// out[i] = dot(rows + i*dim, h) + bias[i], i in [0, n_rows).
// bias may be null.
template <typename T>
void scores_contig(const T* rows, size_t n_rows, size_t dim, const T* h,
                   const T* bias, T* out);

// out[i] = dot(rows + ids[i]*dim, h) + bias[ids[i]]. bias may be null.
template <typename T>
void scores_gather(const T* rows, size_t dim, const int32_t* ids, size_t n,
                   const T* h, const T* bias, T* out);

template <typename T>
T dot(const T* a, const T* b, size_t n);

// y += a * x
template <typename T>
void axpy(T a, const T* x, T* y, size_t n);

// out[0..dim) = sum_i w[i] * rows[ids[i]*dim ..]; out is overwritten.
template <typename T>
void weighted_sum_gather(const T* rows, size_t dim, const int32_t* ids,
                         const T* w, size_t n, T* out);

template <typename T>
T reduce_max(const T* x, size_t n);

// c[m x n] = a[m x dim] * b[n x dim]^T, all row-major.
template <typename T>
void matmul_nt(const T* a, size_t m, const T* b, size_t n, size_t dim, T* c);

// log(sum_i exp(x[i])) with max subtraction; sum accumulated in double.
template <typename T>
double logsumexp(const T* x, size_t n);

// out[i] = exp(x[i] - max) / sum, accumulated in double. Returns the
// logsumexp value so callers get the normalizer for free.
template <typename T>
double softmax(const T* x, size_t n, T* out);

namespace detail {

// Per-ISA entry points, exposed for the equivalence tests.
namespace scalar {
float dot_f32(const float* a, const float* b, size_t n);
double dot_f64(const double* a, const double* b, size_t n);
void axpy_f32(float a, const float* x, float* y, size_t n);
void axpy_f64(double a, const double* x, double* y, size_t n);
float reduce_max_f32(const float* x, size_t n);
double reduce_max_f64(const double* x, size_t n);
void matmul_nt_f32(const float* a, size_t m, const float* b, size_t n, size_t dim, float* c);
void matmul_nt_f64(const double* a, size_t m, const double* b, size_t n, size_t dim, double* c);
}  // namespace scalar

namespace avx2 {
bool supported();
float dot_f32(const float* a, const float* b, size_t n);
double dot_f64(const double* a, const double* b, size_t n);
void axpy_f32(float a, const float* x, float* y, size_t n);
void axpy_f64(double a, const double* x, double* y, size_t n);
float reduce_max_f32(const float* x, size_t n);
double reduce_max_f64(const double* x, size_t n);
void matmul_nt_f32(const float* a, size_t m, const float* b, size_t n, size_t dim, float* c);
void matmul_nt_f64(const double* a, size_t m, const double* b, size_t n, size_t dim, double* c);
}  // namespace avx2

}  // namespace detail

}  // namespace vocap::kernels

#endif  // VOCAP_KERNELS_HPP_
