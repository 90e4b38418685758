// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

// AArch64 variant. Two float64x2 accumulators stand in for the four
// reference lanes: acc01 holds lanes {0,1}, acc23 lanes {2,3}.

#include <arm_neon.h>

#include <limits>

#include "fast/kernels/kernels.hpp"

namespace fast::kernels {

namespace {

double reduceLanes(float64x2_t acc01, float64x2_t acc23) {
  const double l0 = vgetq_lane_f64(acc01, 0);
  const double l1 = vgetq_lane_f64(acc01, 1);
  const double l2 = vgetq_lane_f64(acc23, 0);
  const double l3 = vgetq_lane_f64(acc23, 1);
  return (l0 + l1) + (l2 + l3);
}

double blockedSumNeon(const double* x, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vld1q_f64(x + i));
    acc23 = vaddq_f64(acc23, vld1q_f64(x + i + 2));
  }
  double s = reduceLanes(acc01, acc23);
  for (; i < n; ++i) s += x[i];
  return s;
}

double blockedSquaredDeviationNeon(const double* x, std::size_t n, double center) {
  const float64x2_t c = vdupq_n_f64(center);
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d01 = vsubq_f64(vld1q_f64(x + i), c);
    const float64x2_t d23 = vsubq_f64(vld1q_f64(x + i + 2), c);
    // vmulq + vaddq, not vfmaq: the reference rounds the product.
    acc01 = vaddq_f64(acc01, vmulq_f64(d01, d01));
    acc23 = vaddq_f64(acc23, vmulq_f64(d23, d23));
  }
  double s = reduceLanes(acc01, acc23);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    s += d * d;
  }
  return s;
}

void pairInterpolateNeon(double mcPrimary, double fPrimary, const double* mc, const double* f, std::size_t n,
                         double goal, double* alpha, double* value) {
  const float64x2_t p = vdupq_n_f64(mcPrimary);
  const float64x2_t fp = vdupq_n_f64(fPrimary);
  const float64x2_t g = vdupq_n_f64(goal);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t nan = vdupq_n_f64(std::numeric_limits<double>::quiet_NaN());
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t m = vld1q_f64(mc + j);
    const float64x2_t fj = vld1q_f64(f + j);
    const float64x2_t denom = vsubq_f64(p, m);
    const uint64x2_t below = vandq_u64(vcgeq_f64(p, g), vcgeq_f64(g, m));
    const uint64x2_t above = vandq_u64(vcleq_f64(p, g), vcleq_f64(g, m));
    const uint64x2_t nonzero = vreinterpretq_u64_u32(vmvnq_u32(vreinterpretq_u32_u64(vceqzq_f64(denom))));
    const uint64x2_t valid = vandq_u64(vorrq_u64(below, above), nonzero);
    const float64x2_t a = vdivq_f64(vsubq_f64(g, m), denom);
    const float64x2_t v = vaddq_f64(vmulq_f64(a, fp), vmulq_f64(vsubq_f64(one, a), fj));
    vst1q_f64(alpha + j, vbslq_f64(valid, a, nan));
    vst1q_f64(value + j, vbslq_f64(valid, v, nan));
  }
  if (j < n) scalarKernels().pairInterpolate(mcPrimary, fPrimary, mc + j, f + j, n - j, goal, alpha + j, value + j);
}

}  // namespace

const KernelTable& neonKernels() {
  static constexpr KernelTable table{blockedSumNeon, blockedSquaredDeviationNeon, pairInterpolateNeon};
  return table;
}

}  // namespace fast::kernels
