// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fast {

/// A numeric literal. `integral` remembers whether it was written without a
/// fractional part so that printing reproduces the source form.
struct Number {
  double value = 0.0;
  bool integral = false;

  static Number integer(double v) { return {v, true}; }
  static Number real(double v) { return {v, false}; }

  bool operator==(const Number&) const = default;
};

enum class Op { Add, Sub, Mul, Div, Neg, Lt, Le, Gt, Ge, Eq, Ne, And, Or, Not };

std::string_view opSymbol(Op op);
std::size_t opArity(Op op);
bool isComparison(Op op);
bool isBoolean(Op op);  // and/or/not

struct Expr {
  enum class Kind { Constant, MeasureRef, KnobRef, Apply };

  Kind kind = Kind::Constant;
  Number constant;
  std::string name;
  Op op = Op::Add;
  std::vector<Expr> args;

  static Expr number(Number n);
  static Expr measure(std::string name);
  static Expr knob(std::string name);
  static Expr apply(Op op, std::vector<Expr> args);

  bool operator==(const Expr&) const = default;
};

enum class OptimizationType { Min, Max };

struct MeasureDecl {
  std::string name;
  std::string typeName;

  bool operator==(const MeasureDecl&) const = default;
};

struct KnobDecl {
  std::string name;
  std::vector<Number> range;
  std::optional<Number> reference;

  bool operator==(const KnobDecl&) const = default;
};

/// Parsed intent file: optimise `objective` subject to
/// `constraintMeasure == constraintGoal` over the declared knob space.
struct IntentSpec {
  std::string name;
  OptimizationType optimization = OptimizationType::Min;
  Expr objective;
  std::optional<std::string> constraintMeasure;
  std::optional<Number> constraintGoal;
  std::vector<MeasureDecl> measures;
  std::vector<KnobDecl> knobs;
  std::optional<Expr> knobConstraint;

  bool constrained() const { return constraintMeasure.has_value(); }
  std::optional<std::size_t> measureIndex(std::string_view m) const;
  std::optional<std::size_t> knobIndex(std::string_view k) const;
  std::vector<std::string> measureNames() const;
  std::vector<std::string> knobNames() const;

  bool operator==(const IntentSpec&) const = default;
};

inline constexpr std::string_view kMeasureTypeName = "Double";

/// Checks every structural invariant of an IntentSpec (declared references,
/// distinct names, range/reference membership, expression typing). Throws
/// ValidationError on the first violation.
void validateIntent(const IntentSpec& spec);

/// Type-checks an objective expression against a measure list. Exposed for
/// runtime objective changes.
void validateObjective(const Expr& objective, const std::vector<MeasureDecl>& measures);

std::string_view name(OptimizationType t);

}  // namespace fast
