// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace fast {

/// Running count/mean/M2 (Welford's update): O(1) per sample, unbounded
/// stream length.
struct StreamingStats {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x);
  /// Sample variance m2/(count-1); empty for count < 2.
  std::optional<double> variance() const;
};

/// Functional form of StreamingStats::push.
StreamingStats statsPush(StreamingStats s, double x);

/// Mean and variance over the most recent `capacity` samples.
///
/// Updates are O(1): the oldest sample is swapped out of the running
/// mean/M2. Every time the ring wraps, the moments are recomputed from the
/// buffer so that rounding drift stays bounded over endless streams.
class WindowStats {
 public:
  explicit WindowStats(std::size_t capacity);

  void push(double x);
  void clear();

  std::size_t capacity() const noexcept { return buffer_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool full() const noexcept { return size_ == buffer_.size(); }
  double mean() const noexcept { return mean_; }
  std::optional<double> variance() const;

  /// Buffered samples, oldest first.
  std::vector<double> values() const;

 private:
  void recompute();

  std::vector<double> buffer_;
  std::size_t head_ = 0;  // next slot to overwrite
  std::size_t size_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace fast
