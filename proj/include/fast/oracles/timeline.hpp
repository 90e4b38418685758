// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "fast/intent/intent.hpp"
#include "fast/profiler/model.hpp"
#include "fast/runtime/perturbation.hpp"

namespace fast {

/// Intent and restrictions in force from iteration `begin` on.
struct TimelineSegment {
  std::size_t begin = 0;
  IntentSpec spec;
  Restrictions restrictions;
};

/// What a test evaluates against at each iteration. Scripted events take
/// effect at the exact iteration they name, unlike the runtime, which only
/// reacts at window boundaries.
class IntentTimeline {
 public:
  explicit IntentTimeline(IntentSpec initial, const PerturbationScript& script = {});

  const std::vector<TimelineSegment>& segments() const noexcept { return segments_; }
  const TimelineSegment& at(std::size_t iteration) const;
  const IntentSpec& intentAt(std::size_t iteration) const { return at(iteration).spec; }
  /// Constraint goal at `iteration`; requires a constrained intent there.
  double goalAt(std::size_t iteration) const;
  const IntentSpec& initial() const noexcept { return segments_.front().spec; }

  /// True when `knobs` (ordered as knobNames) satisfies the restrictions in
  /// force at `iteration`.
  bool admissible(std::size_t iteration, const std::vector<std::string>& knobNames,
                  const std::vector<double>& knobs) const;

 private:
  std::vector<TimelineSegment> segments_;
};

}  // namespace fast
