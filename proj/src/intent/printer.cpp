// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/printer.hpp"

#include "fast/numfmt.hpp"

namespace fast {

namespace {

// Binding strength, loosest first. Mirrors the parser's descent order.
int precedence(const Expr& e) {
  if (e.kind != Expr::Kind::Apply) return 8;
  switch (e.op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Not: return 3;
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge:
    case Op::Eq:
    case Op::Ne: return 4;
    case Op::Add:
    case Op::Sub: return 5;
    case Op::Mul:
    case Op::Div: return 6;
    case Op::Neg: return 7;
  }
  return 0;
}

void emit(const Expr& e, std::string& out);

void emitAtLeast(const Expr& e, int minPrec, std::string& out) {
  if (precedence(e) < minPrec) {
    out += '(';
    emit(e, out);
    out += ')';
  } else {
    emit(e, out);
  }
}

void emit(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Constant: out += printNumber(e.constant); return;
    case Expr::Kind::MeasureRef:
    case Expr::Kind::KnobRef: out += e.name; return;
    case Expr::Kind::Apply: break;
  }
  const int p = precedence(e);
  if (e.op == Op::Neg) {
    // "-3" would reparse as a negative literal, so only names go bare.
    const Expr& arg = e.args[0];
    out += '-';
    if (arg.kind == Expr::Kind::MeasureRef || arg.kind == Expr::Kind::KnobRef) {
      emit(arg, out);
    } else {
      out += '(';
      emit(arg, out);
      out += ')';
    }
    return;
  }
  if (e.op == Op::Not) {
    out += '!';
    emitAtLeast(e.args[0], p, out);
    return;
  }
  // Left-associative binaries; comparisons do not chain at all.
  const int leftMin = isComparison(e.op) ? p + 1 : p;
  emitAtLeast(e.args[0], leftMin, out);
  out += ' ';
  out += opSymbol(e.op);
  out += ' ';
  emitAtLeast(e.args[1], p + 1, out);
}

}  // namespace

std::string printNumber(const Number& n) {
  return n.integral ? formatDouble(n.value) : formatFloatLiteral(n.value);
}

std::string printExpr(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

std::string printIntent(const IntentSpec& spec) {
  std::string out = "intent " + spec.name + "\n";
  out += "  ";
  out += name(spec.optimization);
  out += "(" + printExpr(spec.objective) + ")\n";
  if (spec.constraintMeasure) {
    out += "  such that " + *spec.constraintMeasure + " == " + printNumber(*spec.constraintGoal) + "\n";
  }
  out += "measures\n";
  for (const auto& m : spec.measures) out += "  " + m.name + ": " + m.typeName + "\n";
  out += "knobs\n";
  for (const auto& k : spec.knobs) {
    out += "  " + k.name + " = [";
    for (std::size_t i = 0; i < k.range.size(); ++i) {
      if (i) out += ", ";
      out += printNumber(k.range[i]);
    }
    out += "]";
    if (k.reference) out += " reference " + printNumber(*k.reference);
    out += "\n";
  }
  if (spec.knobConstraint) out += "  such that " + printExpr(*spec.knobConstraint) + "\n";
  return out;
}

}  // namespace fast
