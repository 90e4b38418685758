// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/intent.hpp"

#include <algorithm>
#include <set>

#include "fast/errors.hpp"
#include "fast/numfmt.hpp"

namespace fast {

std::string_view opSymbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Neg: return "-";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Eq: return "==";
    case Op::Ne: return "!=";
    case Op::And: return "&&";
    case Op::Or: return "||";
    case Op::Not: return "!";
  }
  return "?";
}

std::size_t opArity(Op op) { return (op == Op::Neg || op == Op::Not) ? 1 : 2; }

bool isComparison(Op op) {
  return op == Op::Lt || op == Op::Le || op == Op::Gt || op == Op::Ge || op == Op::Eq || op == Op::Ne;
}

bool isBoolean(Op op) { return op == Op::And || op == Op::Or || op == Op::Not; }

Expr Expr::number(Number n) {
  Expr e;
  e.kind = Kind::Constant;
  e.constant = n;
  return e;
}

Expr Expr::measure(std::string name) {
  Expr e;
  e.kind = Kind::MeasureRef;
  e.name = std::move(name);
  return e;
}

Expr Expr::knob(std::string name) {
  Expr e;
  e.kind = Kind::KnobRef;
  e.name = std::move(name);
  return e;
}

Expr Expr::apply(Op op, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Apply;
  e.op = op;
  e.args = std::move(args);
  return e;
}

std::optional<std::size_t> IntentSpec::measureIndex(std::string_view m) const {
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (measures[i].name == m) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> IntentSpec::knobIndex(std::string_view k) const {
  for (std::size_t i = 0; i < knobs.size(); ++i) {
    if (knobs[i].name == k) return i;
  }
  return std::nullopt;
}

std::vector<std::string> IntentSpec::measureNames() const {
  std::vector<std::string> out;
  for (const auto& m : measures) out.push_back(m.name);
  return out;
}

std::vector<std::string> IntentSpec::knobNames() const {
  std::vector<std::string> out;
  for (const auto& k : knobs) out.push_back(k.name);
  return out;
}

std::string_view name(OptimizationType t) { return t == OptimizationType::Min ? "min" : "max"; }

namespace {

enum class Type { Numeric, Boolean };

// Which leaf kind an expression context admits.
enum class Context { Objective, KnobConstraint };

Type typeOf(const Expr& e, Context ctx, const std::set<std::string, std::less<>>& names) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return Type::Numeric;
    case Expr::Kind::MeasureRef:
      if (ctx != Context::Objective) throw ValidationError("measure '" + e.name + "' used in the knob constraint");
      if (!names.contains(e.name)) throw ValidationError("undeclared measure '" + e.name + "'");
      return Type::Numeric;
    case Expr::Kind::KnobRef:
      if (ctx != Context::KnobConstraint) throw ValidationError("knob '" + e.name + "' used in the objective");
      if (!names.contains(e.name)) throw ValidationError("undeclared knob '" + e.name + "'");
      return Type::Numeric;
    case Expr::Kind::Apply:
      break;
  }
  if (e.args.size() != opArity(e.op)) {
    throw ValidationError("operator '" + std::string(opSymbol(e.op)) + "' applied to " +
                          std::to_string(e.args.size()) + " arguments");
  }
  std::vector<Type> argTypes;
  for (const auto& a : e.args) argTypes.push_back(typeOf(a, ctx, names));
  const bool allNumeric = std::all_of(argTypes.begin(), argTypes.end(), [](Type t) { return t == Type::Numeric; });
  const bool allBoolean = std::all_of(argTypes.begin(), argTypes.end(), [](Type t) { return t == Type::Boolean; });
  if (isBoolean(e.op)) {
    if (ctx == Context::Objective) throw ValidationError("Boolean operator in objective");
    if (!allBoolean) throw ValidationError("operator '" + std::string(opSymbol(e.op)) + "' expects Boolean operands");
    return Type::Boolean;
  }
  if (isComparison(e.op)) {
    if (ctx == Context::Objective) throw ValidationError("comparison in objective");
    if (!allNumeric) throw ValidationError("comparison expects numeric operands");
    return Type::Boolean;
  }
  if (!allNumeric) throw ValidationError("operator '" + std::string(opSymbol(e.op)) + "' expects numeric operands");
  return Type::Numeric;
}

}  // namespace

void validateObjective(const Expr& objective, const std::vector<MeasureDecl>& measures) {
  std::set<std::string, std::less<>> names;
  for (const auto& m : measures) names.insert(m.name);
  if (typeOf(objective, Context::Objective, names) != Type::Numeric) {
    throw ValidationError("objective must be numeric");
  }
}

void validateIntent(const IntentSpec& spec) {
  if (spec.name.empty()) throw ValidationError("intent name is empty");
  if (spec.constraintMeasure.has_value() != spec.constraintGoal.has_value()) {
    throw ValidationError("constraint measure and goal must be given together");
  }
  if (spec.measures.empty()) throw ValidationError("intent declares no measures");
  if (spec.knobs.empty()) throw ValidationError("intent declares no knobs");

  std::set<std::string, std::less<>> measureNames;
  for (const auto& m : spec.measures) {
    if (!measureNames.insert(m.name).second) throw ValidationError("duplicate measure '" + m.name + "'");
    if (m.typeName != kMeasureTypeName) {
      throw ValidationError("measure '" + m.name + "' has type '" + m.typeName + "'; only " +
                            std::string(kMeasureTypeName) + " is supported");
    }
  }
  if (spec.constraintMeasure && !measureNames.contains(*spec.constraintMeasure)) {
    throw ValidationError("constraint measure '" + *spec.constraintMeasure + "' is not declared");
  }
  validateObjective(spec.objective, spec.measures);

  std::set<std::string, std::less<>> knobNames;
  for (const auto& k : spec.knobs) {
    if (!knobNames.insert(k.name).second) throw ValidationError("duplicate knob '" + k.name + "'");
    if (k.range.empty()) throw ValidationError("knob '" + k.name + "' has an empty range");
    const bool integral = k.range.front().integral;
    std::set<double> seen;
    for (const auto& v : k.range) {
      if (v.integral != integral) throw ValidationError("knob '" + k.name + "' mixes integer and float values");
      if (!seen.insert(v.value).second) {
        throw ValidationError("knob '" + k.name + "' repeats value " + formatDouble(v.value));
      }
    }
    if (k.reference && !seen.contains(k.reference->value)) {
      throw ValidationError("reference value " + formatDouble(k.reference->value) + " of knob '" + k.name +
                            "' is outside its range");
    }
  }
  if (spec.knobConstraint) {
    if (typeOf(*spec.knobConstraint, Context::KnobConstraint, knobNames) != Type::Boolean) {
      throw ValidationError("knob constraint must be a Boolean expression");
    }
  }
}

}  // namespace fast
