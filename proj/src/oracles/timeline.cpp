// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/oracles/timeline.hpp"

#include <algorithm>

#include "fast/errors.hpp"

namespace fast {

IntentTimeline::IntentTimeline(IntentSpec initial, const PerturbationScript& script) {
  validateIntent(initial);
  segments_.push_back(TimelineSegment{0, std::move(initial), {}});
  for (const auto& p : script.events) {
    TimelineSegment next = segments_.back();
    next.begin = p.iteration;
    switch (p.kind) {
      case PerturbationKind::Restrict: {
        auto k = next.spec.knobIndex(p.name);
        if (!k) throw InvalidRestriction("restrict names knob '" + p.name + "' absent from the intent");
        const KnobDecl& decl = next.spec.knobs[*k];
        std::set<double> values;
        if (p.values) {
          values.insert(p.values->begin(), p.values->end());
        } else {
          // Pinning without values fixes the knob at its reference here.
          values.insert(decl.reference ? decl.reference->value : decl.range.front().value);
        }
        next.restrictions[p.name] = std::move(values);
        break;
      }
      case PerturbationKind::Control: next.restrictions.erase(p.name); break;
      default: applyToIntent(next.spec, p); break;
    }
    if (segments_.back().begin == next.begin) {
      segments_.back() = std::move(next);
    } else {
      segments_.push_back(std::move(next));
    }
  }
}

const TimelineSegment& IntentTimeline::at(std::size_t iteration) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), iteration,
                             [](std::size_t i, const TimelineSegment& s) { return i < s.begin; });
  return *(it - 1);
}

double IntentTimeline::goalAt(std::size_t iteration) const {
  const IntentSpec& s = intentAt(iteration);
  if (!s.constrained()) throw Error("intent '" + s.name + "' has no constraint at iteration " + std::to_string(iteration));
  return s.constraintGoal->value;
}

bool IntentTimeline::admissible(std::size_t iteration, const std::vector<std::string>& knobNames,
                                const std::vector<double>& knobs) const {
  for (const auto& [name, values] : at(iteration).restrictions) {
    auto it = std::find(knobNames.begin(), knobNames.end(), name);
    if (it == knobNames.end()) continue;
    if (!values.contains(knobs[static_cast<std::size_t>(it - knobNames.begin())])) return false;
  }
  return true;
}

}  // namespace fast
