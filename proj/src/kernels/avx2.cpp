// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2 -mno-fma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <limits>

#include "fast/kernels/kernels.hpp"

namespace fast::kernels {

namespace {

double reduceLanes(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double blockedSumAvx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = reduceLanes(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double blockedSquaredDeviationAvx2(const double* x, std::size_t n, double center) {
  const __m256d c = _mm256_set1_pd(center);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), c);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = reduceLanes(acc);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    s += d * d;
  }
  return s;
}

void pairInterpolateAvx2(double mcPrimary, double fPrimary, const double* mc, const double* f, std::size_t n,
                         double goal, double* alpha, double* value) {
  const __m256d p = _mm256_set1_pd(mcPrimary);
  const __m256d fp = _mm256_set1_pd(fPrimary);
  const __m256d g = _mm256_set1_pd(goal);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d nan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d m = _mm256_loadu_pd(mc + j);
    const __m256d fj = _mm256_loadu_pd(f + j);
    const __m256d denom = _mm256_sub_pd(p, m);
    const __m256d below = _mm256_and_pd(_mm256_cmp_pd(p, g, _CMP_GE_OQ), _mm256_cmp_pd(g, m, _CMP_GE_OQ));
    const __m256d above = _mm256_and_pd(_mm256_cmp_pd(p, g, _CMP_LE_OQ), _mm256_cmp_pd(g, m, _CMP_LE_OQ));
    const __m256d valid = _mm256_and_pd(_mm256_or_pd(below, above), _mm256_cmp_pd(denom, zero, _CMP_NEQ_OQ));
    const __m256d a = _mm256_div_pd(_mm256_sub_pd(g, m), denom);
    const __m256d v = _mm256_add_pd(_mm256_mul_pd(a, fp), _mm256_mul_pd(_mm256_sub_pd(one, a), fj));
    _mm256_storeu_pd(alpha + j, _mm256_blendv_pd(nan, a, valid));
    _mm256_storeu_pd(value + j, _mm256_blendv_pd(nan, v, valid));
  }
  if (j < n) scalarKernels().pairInterpolate(mcPrimary, fPrimary, mc + j, f + j, n - j, goal, alpha + j, value + j);
}

}  // namespace

const KernelTable& avx2Kernels() {
  static constexpr KernelTable table{blockedSumAvx2, blockedSquaredDeviationAvx2, pairInterpolateAvx2};
  return table;
}

}  // namespace fast::kernels
