// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/demo/camlike.hpp"

#include <cmath>
#include <numbers>

namespace fast::demo {

namespace {

constexpr double kBaseWork = 1.5e7;

}  // namespace

FrameSource::FrameSource(Params p) : p_(p), rng_(p.seed), jitter_(-p.jitter, p.jitter) {}

double FrameSource::next() {
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(index_) / p_.period;
  ++index_;
  const double j = p_.jitter > 0.0 ? jitter_(rng_) : 0.0;
  return 1.0 + p_.drift * std::sin(phase) + j;
}

FrameCost encodeFrame(double quantizer, double complexity) {
  FrameCost c;
  // Every 6 quantizer steps halve the work.
  c.work = kBaseWork * complexity * std::exp2((Camlike::kQuantizerReference - quantizer) / 6.0);
  c.quality = 60.0 - 0.75 * quantizer - 8.0 * (complexity - 1.0);
  return c;
}

Camlike::Camlike(Runtime& rt, std::size_t frames, FrameSource::Params source)
    : rt_(rt), frames_(frames), source_(source), quantizer_(rt.knob<int>("quantizer", static_cast<int>(kQuantizerReference))) {}

RunResult Camlike::run(std::string_view intentName) {
  return rt_.optimize(intentName, {quantizer_}, [&] {
    if (frames_ != 0 && source_.produced() == frames_) return false;
    const FrameCost c = encodeFrame(quantizer_.get(), source_.next());
    rt_.measure("quality", c.quality);
    rt_.consume(c.work, kCamlikeParallelFraction);
    return true;
  });
}

}  // namespace fast::demo
