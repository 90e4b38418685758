// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fast/intent/intent.hpp"

namespace fast {

enum class PerturbationKind { Goal, ConstraintMeasure, OptimizationType, Objective, Restrict, Control };

std::string_view name(PerturbationKind k);

/// One scripted event. Only the fields relevant to `kind` are set.
///   goal               <number>
///   constraintMeasure  <measure> [<goal>]
///   optimizationType   min | max
///   objective          <expression over measures>
///   restrict           <knob> [<value> ...]   (no values: pin to current)
///   control            <knob>
struct Perturbation {
  std::size_t iteration = 0;
  PerturbationKind kind = PerturbationKind::Goal;
  std::string payload;

  double goal = 0.0;
  std::string name;  // measure or knob
  std::optional<double> newGoal;
  OptimizationType optimization = OptimizationType::Min;
  Expr objective;
  std::optional<std::vector<double>> values;

  bool changesIntent() const noexcept {
    return kind != PerturbationKind::Restrict && kind != PerturbationKind::Control;
  }
};

struct PerturbationScript {
  /// Sorted by iteration; file order is kept among equal iterations.
  std::vector<Perturbation> events;

  bool empty() const noexcept { return events.empty(); }
};

PerturbationScript parsePerturbationScript(std::string_view text);
PerturbationScript loadPerturbationScript(const std::filesystem::path& path);

/// Applies an intent-changing event to `spec` and re-validates it. Throws
/// ValidationError when the result is not a valid intent.
void applyToIntent(IntentSpec& spec, const Perturbation& p);

}  // namespace fast
