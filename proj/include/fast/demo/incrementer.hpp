// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "fast/runtime/runtime.hpp"

namespace fast::demo {

/// Number of increments `x += step` starting from x = 0.0 until x >= threshold.
/// Integral arguments are counted in closed form; others by running the loop.
/// Throws Error when step is not positive.
double incrementerLoopCount(double step, double threshold);

/// The incrementer: each iteration counts up to `threshold` by `step` and
/// reports the count as "operations" and as its work.
class Incrementer : public Application {
 public:
  static constexpr double kStepReference = 1;
  static constexpr double kThresholdReference = 8000000;

  /// `iterations` = 0 runs until the runtime's budget ends.
  explicit Incrementer(Runtime& rt, std::size_t iterations = 0);

  RunResult run(std::string_view intentName) override;

  const Knob<double>& step() const noexcept { return step_; }
  const Knob<double>& threshold() const noexcept { return threshold_; }

 private:
  Runtime& rt_;
  std::size_t iterations_;
  Knob<double> step_;
  Knob<double> threshold_;
};

}  // namespace fast::demo
