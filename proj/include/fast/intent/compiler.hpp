// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>

#include "fast/intent/intent.hpp"

namespace fast {

/// Knob name -> value.
using KnobBinding = std::map<std::string, double, std::less<>>;

/// Expressions lowered to nested closures over positional value arrays.
/// Names are resolved to indices once, at compile time.
using NumericFn = std::function<double(const double*)>;
using BooleanFn = std::function<bool(const double*)>;

NumericFn compileNumeric(const Expr& e, const std::vector<std::string>& slots);
BooleanFn compileBoolean(const Expr& e, const std::vector<std::string>& slots);

/// An intent with its objective and knob constraint pre-compiled.
/// Immutable after construction; safe to share across threads.
class CompiledIntent {
 public:
  /// `spec` must already be valid (as returned by parseIntent).
  explicit CompiledIntent(IntentSpec spec);

  const IntentSpec& spec() const noexcept { return spec_; }

  /// `measures` is ordered as spec().measures.
  double objective(std::span<const double> measures) const { return objective_(measures.data()); }

  /// `knobValues` is ordered as spec().knobs.
  bool knobConstraint(std::span<const double> knobValues) const {
    return knobConstraint_(knobValues.data());
  }

  /// Missing knobs read as NaN, which fails every comparison.
  bool knobConstraint(const KnobBinding& binding) const;

  bool constrained() const noexcept { return spec_.constrained(); }
  /// Index of the constraint measure within spec().measures. Requires constrained().
  std::size_t constraintIndex() const noexcept { return constraintIndex_; }
  double goal() const noexcept { return spec_.constraintGoal ? spec_.constraintGoal->value : 0.0; }

 private:
  IntentSpec spec_;
  NumericFn objective_;
  BooleanFn knobConstraint_;
  std::size_t constraintIndex_ = 0;
};

CompiledIntent compileIntent(IntentSpec spec);

}  // namespace fast
