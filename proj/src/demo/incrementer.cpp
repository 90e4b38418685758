// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/demo/incrementer.hpp"

#include <cmath>
#include <cstdint>

#include "fast/errors.hpp"

namespace fast::demo {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

bool isWhole(double v) { return std::isfinite(v) && v == std::floor(v) && std::fabs(v) < kExactIntegerLimit; }

}  // namespace

double incrementerLoopCount(double step, double threshold) {
  if (!(step > 0.0)) throw Error("incrementer step must be positive");
  if (!(threshold > 0.0)) return 0.0;
  if (isWhole(step) && isWhole(threshold)) {
    // Every partial sum is an integer below 2^53, so the loop is exact.
    const auto s = static_cast<std::uint64_t>(step);
    const auto t = static_cast<std::uint64_t>(threshold);
    return static_cast<double>((t + s - 1) / s);
  }
  double x = 0.0;
  double count = 0.0;
  while (x < threshold) {
    x += step;
    count += 1.0;
  }
  return count;
}

Incrementer::Incrementer(Runtime& rt, std::size_t iterations)
    : rt_(rt),
      iterations_(iterations),
      step_(rt.knob<double>("step", kStepReference)),
      threshold_(rt.knob<double>("threshold", kThresholdReference)) {}

RunResult Incrementer::run(std::string_view intentName) {
  std::size_t done = 0;
  return rt_.optimize(intentName, {threshold_, step_}, [&] {
    if (iterations_ != 0 && done == iterations_) return false;
    ++done;
    const double operations = incrementerLoopCount(step_.get(), threshold_.get());
    rt_.measure("operations", operations);
    if (operations > 0.0) rt_.consume(operations);
    return true;
  });
}

}  // namespace fast::demo
