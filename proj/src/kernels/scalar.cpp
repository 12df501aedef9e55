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
// Scalar reference kernels. These define the semantics the AVX2 variants
// are tested against; keep them simple.

#include "vocap/kernels.hpp"

namespace vocap::kernels::detail::scalar {

template <typename T>
static T dot_impl(const T* a, const T* b, size_t n) {
  T acc = T(0);
  for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

float dot_f32(const float* a, const float* b, size_t n) { return dot_impl(a, b, n); }
double dot_f64(const double* a, const double* b, size_t n) { return dot_impl(a, b, n); }

void axpy_f32(float a, const float* x, float* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}
void axpy_f64(double a, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
static T reduce_max_impl(const T* x, size_t n) {
  T m = x[0];
  for (size_t i = 1; i < n; ++i) m = x[i] > m ? x[i] : m;
  return m;
}

float reduce_max_f32(const float* x, size_t n) { return reduce_max_impl(x, n); }
double reduce_max_f64(const double* x, size_t n) { return reduce_max_impl(x, n); }

template <typename T>
static void matmul_nt_impl(const T* a, size_t m, const T* b, size_t n, size_t dim, T* c) {
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      c[i * n + j] = dot_impl(a + i * dim, b + j * dim, dim);
    }
  }
}

void matmul_nt_f32(const float* a, size_t m, const float* b, size_t n, size_t dim, float* c) {
  matmul_nt_impl(a, m, b, n, dim, c);
}
void matmul_nt_f64(const double* a, size_t m, const double* b, size_t n, size_t dim, double* c) {
  matmul_nt_impl(a, m, b, n, dim, c);
}

}  // namespace vocap::kernels::detail::scalar
