// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <limits>

#include "fast/kernels/kernels.hpp"

namespace fast::kernels {

namespace {

double blockedSumScalar(const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lane[0] += x[i];
    lane[1] += x[i + 1];
    lane[2] += x[i + 2];
    lane[3] += x[i + 3];
  }
  double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) s += x[i];
  return s;
}

double blockedSquaredDeviationScalar(const double* x, std::size_t n, double center) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t k = 0; k < 4; ++k) {
      const double d = x[i + k] - center;
      lane[k] += d * d;
    }
  }
  double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    s += d * d;
  }
  return s;
}

void pairInterpolateScalar(double mcPrimary, double fPrimary, const double* mc, const double* f, std::size_t n,
                           double goal, double* alpha, double* value) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t j = 0; j < n; ++j) {
    const double denom = mcPrimary - mc[j];
    const bool brackets = (mcPrimary >= goal && goal >= mc[j]) || (mcPrimary <= goal && goal <= mc[j]);
    if (!brackets || denom == 0.0) {
      alpha[j] = nan;
      value[j] = nan;
      continue;
    }
    const double a = (goal - mc[j]) / denom;
    alpha[j] = a;
    value[j] = a * fPrimary + (1.0 - a) * f[j];
  }
}

}  // namespace

const KernelTable& scalarKernels() {
  static constexpr KernelTable table{blockedSumScalar, blockedSquaredDeviationScalar, pairInterpolateScalar};
  return table;
}

}  // namespace fast::kernels
