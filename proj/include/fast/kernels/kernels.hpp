// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops of the controller and the statistics code.
//
// Every kernel has a scalar reference implementation and, where the build
// target allows, SIMD variants selected once at runtime. Variants are
// required to agree with the scalar reference bit-for-bit: the scalar code
// fixes a 4-lane accumulation order and the SIMD code reproduces it, and no
// variant may contract a*b+c into an FMA.

namespace fast::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isaName(Isa isa);

struct KernelTable {
  /// Sum in 4 interleaved lanes, combined as (l0+l1)+(l2+l3), then the
  /// tail elements added left to right.
  double (*blockedSum)(const double* x, std::size_t n);

  /// Sum of (x[i]-center)^2 in the same lane order as blockedSum.
  double (*blockedSquaredDeviation)(const double* x, std::size_t n, double center);

  /// For each j, the weight of (mcPrimary, fPrimary) in the mix with
  /// (mc[j], f[j]) whose constraint value is `goal`:
  ///   alpha[j] = (goal - mc[j]) / (mcPrimary - mc[j])
  ///   value[j] = alpha[j]*fPrimary + (1-alpha[j])*f[j]
  /// Both are NaN when the pair does not bracket goal or mc[j] == mcPrimary.
  void (*pairInterpolate)(double mcPrimary, double fPrimary, const double* mc, const double* f, std::size_t n,
                          double goal, double* alpha, double* value);
};

const KernelTable& scalarKernels();
#if defined(FAST_BUILD_AVX2)
const KernelTable& avx2Kernels();
#endif
#if defined(FAST_BUILD_NEON)
const KernelTable& neonKernels();
#endif

/// Variants compiled in and supported by the running CPU, scalar first.
std::vector<Isa> availableIsas();
const KernelTable& kernelsFor(Isa isa);

/// The variant used by the convenience wrappers below. Chosen on first use:
/// the best available ISA unless FAST_KERNELS=scalar is set in the
/// environment.
Isa activeIsa();

double sum(std::span<const double> x);
double mean(std::span<const double> x);
/// Sample variance (n-1 denominator) about the blocked mean; 0 for n < 2.
double sampleVariance(std::span<const double> x);
void pairInterpolate(double mcPrimary, double fPrimary, std::span<const double> mc, std::span<const double> f,
                     double goal, std::span<double> alpha, std::span<double> value);

}  // namespace fast::kernels
