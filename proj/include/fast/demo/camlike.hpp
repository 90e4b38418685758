// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "fast/runtime/runtime.hpp"

namespace fast::demo {

/// Seeded frame source. Complexity drifts slowly around 1 (a sine of
/// amplitude `drift` and period `period` frames) with small per-frame jitter.
class FrameSource {
 public:
  struct Params {
    std::uint64_t seed = 7;
    double drift = 0.10;
    double period = 2000.0;
    double jitter = 0.02;
  };

  explicit FrameSource(Params p);
  FrameSource() : FrameSource(Params{}) {}

  /// Complexity of the next frame.
  double next();
  std::size_t produced() const noexcept { return index_; }

 private:
  Params p_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> jitter_;
  std::size_t index_ = 0;
};

/// Quality / work model of one encoded frame.
struct FrameCost {
  double work = 0.0;
  double quality = 0.0;
};

/// Lower quantizer: more work, higher quality.
FrameCost encodeFrame(double quantizer, double complexity);

inline constexpr double kCamlikeParallelFraction = 0.9;

/// Synthetic video-encoder-like streaming application with one quality knob.
class Camlike : public Application {
 public:
  static constexpr double kQuantizerReference = 26;

  /// `frames` = 0 streams until the runtime's budget ends.
  Camlike(Runtime& rt, std::size_t frames = 0, FrameSource::Params source = {});

  RunResult run(std::string_view intentName) override;

  const Knob<int>& quantizer() const noexcept { return quantizer_; }

 private:
  Runtime& rt_;
  std::size_t frames_;
  FrameSource source_;
  Knob<int> quantizer_;
};

}  // namespace fast::demo
