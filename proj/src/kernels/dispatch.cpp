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

#include "vocap/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace vocap::kernels {

namespace {

Isa pick_isa() {
  Isa isa = detail::avx2::supported() ? Isa::kAvx2 : Isa::kScalar;
  if (const char* env = std::getenv("VOCAP_ISA")) {
    if (std::strcmp(env, "scalar") == 0) {
      isa = Isa::kScalar;
    } else if (std::strcmp(env, "avx2") == 0) {
      if (detail::avx2::supported()) {
        isa = Isa::kAvx2;
      } else {
        std::fprintf(stderr, "vocap: VOCAP_ISA=avx2 requested but unsupported, using scalar\n");
        isa = Isa::kScalar;
      }
    } else {
      std::fprintf(stderr, "vocap: ignoring unknown VOCAP_ISA=%s\n", env);
    }
  }
  return isa;
}

Isa g_isa = pick_isa();

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

Isa active_isa() { return g_isa; }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !detail::avx2::supported()) return;
  g_isa = isa;
}

template <>
float dot(const float* a, const float* b, size_t n) {
  return g_isa == Isa::kAvx2 ? detail::avx2::dot_f32(a, b, n) : detail::scalar::dot_f32(a, b, n);
}

template <>
double dot(const double* a, const double* b, size_t n) {
  return g_isa == Isa::kAvx2 ? detail::avx2::dot_f64(a, b, n) : detail::scalar::dot_f64(a, b, n);
}

template <>
void axpy(float a, const float* x, float* y, size_t n) {
  g_isa == Isa::kAvx2 ? detail::avx2::axpy_f32(a, x, y, n) : detail::scalar::axpy_f32(a, x, y, n);
}

template <>
void axpy(double a, const double* x, double* y, size_t n) {
  g_isa == Isa::kAvx2 ? detail::avx2::axpy_f64(a, x, y, n) : detail::scalar::axpy_f64(a, x, y, n);
}

template <>
float reduce_max(const float* x, size_t n) {
  return g_isa == Isa::kAvx2 ? detail::avx2::reduce_max_f32(x, n)
                             : detail::scalar::reduce_max_f32(x, n);
}

template <>
double reduce_max(const double* x, size_t n) {
  return g_isa == Isa::kAvx2 ? detail::avx2::reduce_max_f64(x, n)
                             : detail::scalar::reduce_max_f64(x, n);
}

template <>
void matmul_nt(const float* a, size_t m, const float* b, size_t n, size_t dim, float* c) {
  g_isa == Isa::kAvx2 ? detail::avx2::matmul_nt_f32(a, m, b, n, dim, c)
                      : detail::scalar::matmul_nt_f32(a, m, b, n, dim, c);
}

template <>
void matmul_nt(const double* a, size_t m, const double* b, size_t n, size_t dim, double* c) {
  g_isa == Isa::kAvx2 ? detail::avx2::matmul_nt_f64(a, m, b, n, dim, c)
                      : detail::scalar::matmul_nt_f64(a, m, b, n, dim, c);
}

template <typename T>
void scores_contig(const T* rows, size_t n_rows, size_t dim, const T* h, const T* bias, T* out) {
  for (size_t i = 0; i < n_rows; ++i) {
    T s = dot(rows + i * dim, h, dim);
    out[i] = bias ? s + bias[i] : s;
  }
}

template void scores_contig<float>(const float*, size_t, size_t, const float*, const float*, float*);
template void scores_contig<double>(const double*, size_t, size_t, const double*, const double*, double*);

template <typename T>
void scores_gather(const T* rows, size_t dim, const int32_t* ids, size_t n, const T* h,
                   const T* bias, T* out) {
  for (size_t i = 0; i < n; ++i) {
    const int32_t id = ids[i];
    T s = dot(rows + static_cast<size_t>(id) * dim, h, dim);
    out[i] = bias ? s + bias[id] : s;
  }
}

template void scores_gather<float>(const float*, size_t, const int32_t*, size_t, const float*,
                                   const float*, float*);
template void scores_gather<double>(const double*, size_t, const int32_t*, size_t, const double*,
                                    const double*, double*);

template <typename T>
void weighted_sum_gather(const T* rows, size_t dim, const int32_t* ids, const T* w, size_t n,
                         T* out) {
  for (size_t d = 0; d < dim; ++d) out[d] = T(0);
  for (size_t i = 0; i < n; ++i) {
    axpy(w[i], rows + static_cast<size_t>(ids[i]) * dim, out, dim);
  }
}

template void weighted_sum_gather<float>(const float*, size_t, const int32_t*, const float*,
                                         size_t, float*);
template void weighted_sum_gather<double>(const double*, size_t, const int32_t*, const double*,
                                          size_t, double*);

template <typename T>
double logsumexp(const T* x, size_t n) {
  const double m = static_cast<double>(reduce_max(x, n));
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) sum += std::exp(static_cast<double>(x[i]) - m);
  return m + std::log(sum);
}

template double logsumexp<float>(const float*, size_t);
template double logsumexp<double>(const double*, size_t);

template <typename T>
double softmax(const T* x, size_t n, T* out) {
  const double m = static_cast<double>(reduce_max(x, n));
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double e = std::exp(static_cast<double>(x[i]) - m);
    out[i] = static_cast<T>(e);
    sum += e;
  }
  const double inv = 1.0 / sum;
  for (size_t i = 0; i < n; ++i) out[i] = static_cast<T>(static_cast<double>(out[i]) * inv);
  return m + std::log(sum);
}

template double softmax<float>(const float*, size_t, float*);
template double softmax<double>(const double*, size_t, double*);

}  // namespace vocap::kernels
