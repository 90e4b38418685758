// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/compiler.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "fast/errors.hpp"

namespace fast {

namespace {

std::size_t slotOf(const std::string& name, const std::vector<std::string>& slots) {
  auto it = std::find(slots.begin(), slots.end(), name);
  if (it == slots.end()) throw ValidationError("unresolved name '" + name + "'");
  return static_cast<std::size_t>(it - slots.begin());
}

template <typename F>
NumericFn binary(const Expr& e, const std::vector<std::string>& slots, F f) {
  return [a = compileNumeric(e.args[0], slots), b = compileNumeric(e.args[1], slots), f](const double* v) {
    return f(a(v), b(v));
  };
}

template <typename F>
BooleanFn compare(const Expr& e, const std::vector<std::string>& slots, F f) {
  return [a = compileNumeric(e.args[0], slots), b = compileNumeric(e.args[1], slots), f](const double* v) {
    return f(a(v), b(v));
  };
}

}  // namespace

NumericFn compileNumeric(const Expr& e, const std::vector<std::string>& slots) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return [c = e.constant.value](const double*) { return c; };
    case Expr::Kind::MeasureRef:
    case Expr::Kind::KnobRef:
      return [i = slotOf(e.name, slots)](const double* v) { return v[i]; };
    case Expr::Kind::Apply:
      break;
  }
  switch (e.op) {
    case Op::Add: return binary(e, slots, [](double a, double b) { return a + b; });
    case Op::Sub: return binary(e, slots, [](double a, double b) { return a - b; });
    case Op::Mul: return binary(e, slots, [](double a, double b) { return a * b; });
    case Op::Div: return binary(e, slots, [](double a, double b) { return a / b; });
    case Op::Neg: return [a = compileNumeric(e.args[0], slots)](const double* v) { return -a(v); };
    default: throw ValidationError("Boolean expression used as a number");
  }
}

BooleanFn compileBoolean(const Expr& e, const std::vector<std::string>& slots) {
  if (e.kind != Expr::Kind::Apply) throw ValidationError("number used as a Boolean");
  switch (e.op) {
    case Op::Lt: return compare(e, slots, [](double a, double b) { return a < b; });
    case Op::Le: return compare(e, slots, [](double a, double b) { return a <= b; });
    case Op::Gt: return compare(e, slots, [](double a, double b) { return a > b; });
    case Op::Ge: return compare(e, slots, [](double a, double b) { return a >= b; });
    case Op::Eq: return compare(e, slots, [](double a, double b) { return a == b; });
    case Op::Ne: return compare(e, slots, [](double a, double b) { return a != b; });
    case Op::And:
      return [a = compileBoolean(e.args[0], slots), b = compileBoolean(e.args[1], slots)](const double* v) {
        return a(v) && b(v);
      };
    case Op::Or:
      return [a = compileBoolean(e.args[0], slots), b = compileBoolean(e.args[1], slots)](const double* v) {
        return a(v) || b(v);
      };
    case Op::Not: return [a = compileBoolean(e.args[0], slots)](const double* v) { return !a(v); };
    default: throw ValidationError("number used as a Boolean");
  }
}

CompiledIntent::CompiledIntent(IntentSpec spec) : spec_(std::move(spec)) {
  objective_ = compileNumeric(spec_.objective, spec_.measureNames());
  if (spec_.knobConstraint) {
    knobConstraint_ = compileBoolean(*spec_.knobConstraint, spec_.knobNames());
  } else {
    knobConstraint_ = [](const double*) { return true; };
  }
  if (spec_.constraintMeasure) constraintIndex_ = *spec_.measureIndex(*spec_.constraintMeasure);
}

bool CompiledIntent::knobConstraint(const KnobBinding& binding) const {
  std::vector<double> values;
  values.reserve(spec_.knobs.size());
  for (const auto& k : spec_.knobs) {
    auto it = binding.find(k.name);
    values.push_back(it == binding.end() ? std::numeric_limits<double>::quiet_NaN() : it->second);
  }
  return knobConstraint_(values.data());
}

CompiledIntent compileIntent(IntentSpec spec) { return CompiledIntent(std::move(spec)); }

}  // namespace fast
