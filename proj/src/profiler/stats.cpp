// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/profiler/stats.hpp"

#include <algorithm>
#include <stdexcept>

#include "fast/kernels/kernels.hpp"

namespace fast {

void StreamingStats::push(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

std::optional<double> StreamingStats::variance() const {
  if (count < 2) return std::nullopt;
  return m2 / static_cast<double>(count - 1);
}

StreamingStats statsPush(StreamingStats s, double x) {
  s.push(x);
  return s;
}

WindowStats::WindowStats(std::size_t capacity) : buffer_(capacity, 0.0) {
  if (capacity == 0) throw std::invalid_argument("window capacity must be positive");
}

void WindowStats::clear() {
  head_ = 0;
  size_ = 0;
  mean_ = 0.0;
  m2_ = 0.0;
}

void WindowStats::push(double x) {
  if (size_ < buffer_.size()) {
    buffer_[head_] = x;
    head_ = (head_ + 1) % buffer_.size();
    ++size_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(size_);
    m2_ += delta * (x - mean_);
    return;
  }
  const double old = buffer_[head_];
  buffer_[head_] = x;
  head_ = (head_ + 1) % buffer_.size();
  if (head_ == 0) {
    recompute();
    return;
  }
  const double n = static_cast<double>(size_);
  const double oldMean = mean_;
  mean_ += (x - old) / n;
  m2_ += (x - old) * ((x - mean_) + (old - oldMean));
  m2_ = std::max(m2_, 0.0);
}

void WindowStats::recompute() {
  const auto v = values();
  mean_ = kernels::mean(v);
  m2_ = v.size() < 2 ? 0.0 : kernels::sampleVariance(v) * static_cast<double>(v.size() - 1);
}

std::optional<double> WindowStats::variance() const {
  if (size_ < 2) return std::nullopt;
  return m2_ / static_cast<double>(size_ - 1);
}

std::vector<double> WindowStats::values() const {
  std::vector<double> out;
  out.reserve(size_);
  const std::size_t start = (head_ + buffer_.size() - size_) % buffer_.size();
  for (std::size_t i = 0; i < size_; ++i) out.push_back(buffer_[(start + i) % buffer_.size()]);
  return out;
}

}  // namespace fast
