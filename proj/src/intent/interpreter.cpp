// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/interpreter.hpp"

#include <limits>

#include "fast/errors.hpp"

namespace fast {

namespace {

double lookup(const std::map<std::string, double, std::less<>>& m, const std::string& name) {
  auto it = m.find(name);
  return it == m.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
}

}  // namespace

double interpretNumeric(const Expr& e, const Environment& env) {
  switch (e.kind) {
    case Expr::Kind::Constant: return e.constant.value;
    case Expr::Kind::MeasureRef: return lookup(env.measures, e.name);
    case Expr::Kind::KnobRef: return lookup(env.knobs, e.name);
    case Expr::Kind::Apply: break;
  }
  switch (e.op) {
    case Op::Add: return interpretNumeric(e.args[0], env) + interpretNumeric(e.args[1], env);
    case Op::Sub: return interpretNumeric(e.args[0], env) - interpretNumeric(e.args[1], env);
    case Op::Mul: return interpretNumeric(e.args[0], env) * interpretNumeric(e.args[1], env);
    case Op::Div: return interpretNumeric(e.args[0], env) / interpretNumeric(e.args[1], env);
    case Op::Neg: return -interpretNumeric(e.args[0], env);
    default: throw ValidationError("Boolean expression used as a number");
  }
}

bool interpretBoolean(const Expr& e, const Environment& env) {
  if (e.kind != Expr::Kind::Apply) throw ValidationError("number used as a Boolean");
  switch (e.op) {
    case Op::Lt: return interpretNumeric(e.args[0], env) < interpretNumeric(e.args[1], env);
    case Op::Le: return interpretNumeric(e.args[0], env) <= interpretNumeric(e.args[1], env);
    case Op::Gt: return interpretNumeric(e.args[0], env) > interpretNumeric(e.args[1], env);
    case Op::Ge: return interpretNumeric(e.args[0], env) >= interpretNumeric(e.args[1], env);
    case Op::Eq: return interpretNumeric(e.args[0], env) == interpretNumeric(e.args[1], env);
    case Op::Ne: return interpretNumeric(e.args[0], env) != interpretNumeric(e.args[1], env);
    case Op::And: return interpretBoolean(e.args[0], env) && interpretBoolean(e.args[1], env);
    case Op::Or: return interpretBoolean(e.args[0], env) || interpretBoolean(e.args[1], env);
    case Op::Not: return !interpretBoolean(e.args[0], env);
    default: throw ValidationError("number used as a Boolean");
  }
}

}  // namespace fast
