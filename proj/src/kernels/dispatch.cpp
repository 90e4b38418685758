// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "fast/kernels/kernels.hpp"

namespace fast::kernels {

std::string_view isaName(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

std::vector<Isa> availableIsas() {
  std::vector<Isa> out{Isa::Scalar};
#if defined(FAST_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2")) out.push_back(Isa::Avx2);
#endif
#if defined(FAST_BUILD_NEON)
  out.push_back(Isa::Neon);
#endif
  return out;
}

const KernelTable& kernelsFor(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return scalarKernels();
#if defined(FAST_BUILD_AVX2)
    case Isa::Avx2: return avx2Kernels();
#endif
#if defined(FAST_BUILD_NEON)
    case Isa::Neon: return neonKernels();
#endif
    default: break;
  }
  throw std::invalid_argument("kernel variant '" + std::string(isaName(isa)) + "' is not built in");
}

namespace {

Isa selectIsa() {
  if (const char* env = std::getenv("FAST_KERNELS"); env && std::string_view(env) == "scalar") return Isa::Scalar;
  return availableIsas().back();
}

const KernelTable& active() {
  static const KernelTable& table = kernelsFor(activeIsa());
  return table;
}

}  // namespace

Isa activeIsa() {
  static const Isa isa = selectIsa();
  return isa;
}

double sum(std::span<const double> x) { return active().blockedSum(x.data(), x.size()); }

double mean(std::span<const double> x) { return x.empty() ? 0.0 : sum(x) / static_cast<double>(x.size()); }

double sampleVariance(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double m = mean(x);
  return active().blockedSquaredDeviation(x.data(), x.size(), m) / static_cast<double>(x.size() - 1);
}

void pairInterpolate(double mcPrimary, double fPrimary, std::span<const double> mc, std::span<const double> f,
                     double goal, std::span<double> alpha, std::span<double> value) {
  active().pairInterpolate(mcPrimary, fPrimary, mc.data(), f.data(), mc.size(), goal, alpha.data(), value.data());
}

}  // namespace fast::kernels
