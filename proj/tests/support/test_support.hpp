// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures for the unit and acceptance suites: random intent and
// model generators plus the eight-row incrementer model.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fast/controller/controller.hpp"
#include "fast/intent/compiler.hpp"
#include "fast/intent/intent.hpp"
#include "fast/intent/parser.hpp"
#include "fast/profiler/model.hpp"

namespace fast::testing {

inline std::filesystem::path dataPath(std::string_view file) {
  return std::filesystem::path(FAST_DATA_DIR) / file;
}

inline IntentSpec incrementerIntent() { return loadIntentFile(dataPath("incrementer.intent")); }

/// Knob table (step, threshold, coreFrequency) and measure table (energy,
/// latency, operations) of the profiled incrementer with eight
/// configurations.
inline ControllerModel smallIncrementerModel() {
  ControllerModel m;
  m.knobNames = {"step", "threshold", "coreFrequency"};
  m.measureNames = {"energy", "latency", "operations"};
  const double knobs[8][3] = {{1, 10000, 300},  {4, 10000, 300},  {1, 20000, 300},  {4, 20000, 300},
                              {1, 10000, 1200}, {4, 10000, 1200}, {1, 20000, 1200}, {4, 20000, 1200}};
  const double measures[8][3] = {{6048055, 0.017, 10000}, {5367987, 0.011, 2537}, {10362040, 0.031, 19949},
                                 {4311562, 0.011, 5025},  {3495722, 0.008, 10000}, {2587574, 0.004, 2537},
                                 {4904005, 0.012, 19949}, {2729713, 0.006, 5025}};
  for (std::size_t i = 0; i < 8; ++i) {
    m.rows.push_back({i, {knobs[i][0], knobs[i][1], knobs[i][2]}, {measures[i][0], measures[i][1], measures[i][2]}});
  }
  return m;
}

/// Intent over the small incrementer model's knobs and measures.
inline IntentSpec smallModelIntent(std::string_view objectiveAndConstraint) {
  std::string text = "intent inc\n  ";
  text += objectiveAndConstraint;
  text +=
      "\nmeasures\n  energy: Double\n  latency: Double\n  operations: Double\n"
      "knobs\n  step = [1,4]\n  threshold = [10000,20000]\n  coreFrequency = [300,1200]\n";
  return parseIntent(text);
}

// ------------------------------------------------------------- generators

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() noexcept { return rng_; }

  int uniformInt(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniformReal(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniformInt(0, static_cast<int>(v.size()) - 1))];
  }

  Number number() {
    if (coin()) return Number::integer(uniformInt(-50, 1000));
    return Number::real(uniformReal(0.0, 1000.0));
  }

  /// Numeric expression over `names`, referenced as measures or knobs.
  Expr numeric(const std::vector<std::string>& names, bool knobs, int depth) {
    if (depth <= 0 || coin(0.3)) {
      if (coin(0.7)) return knobs ? Expr::knob(pick(names)) : Expr::measure(pick(names));
      return Expr::number(number());
    }
    const int choice = uniformInt(0, 4);
    if (choice == 4) {
      // Negating a literal would reparse as a negative literal.
      Expr arg = numeric(names, knobs, depth - 1);
      if (arg.kind == Expr::Kind::Constant) return arg;
      return Expr::apply(Op::Neg, {std::move(arg)});
    }
    const Op ops[] = {Op::Add, Op::Sub, Op::Mul, Op::Div};
    return Expr::apply(ops[choice], {numeric(names, knobs, depth - 1), numeric(names, knobs, depth - 1)});
  }

  Expr boolean(const std::vector<std::string>& knobNames, int depth) {
    if (depth <= 0 || coin(0.5)) {
      const Op cmp[] = {Op::Lt, Op::Le, Op::Gt, Op::Ge, Op::Eq, Op::Ne};
      return Expr::apply(cmp[uniformInt(0, 5)],
                         {numeric(knobNames, true, 2), numeric(knobNames, true, 1)});
    }
    switch (uniformInt(0, 2)) {
      case 0: return Expr::apply(Op::And, {boolean(knobNames, depth - 1), boolean(knobNames, depth - 1)});
      case 1: return Expr::apply(Op::Or, {boolean(knobNames, depth - 1), boolean(knobNames, depth - 1)});
      default: return Expr::apply(Op::Not, {boolean(knobNames, depth - 1)});
    }
  }

  std::vector<Number> range(std::size_t n) {
    std::vector<Number> out;
    const bool integral = coin();
    while (out.size() < n) {
      const Number v = integral ? Number::integer(uniformInt(-5, 40)) : Number::real(uniformReal(-5.0, 40.0));
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  }

  /// A valid intent with up to `maxKnobs` knobs of up to `maxValues` values.
  IntentSpec intent(std::size_t maxKnobs = 4, std::size_t maxValues = 5, double constraintProbability = 0.7) {
    IntentSpec s;
    s.name = "t" + std::to_string(uniformInt(0, 99999));
    s.optimization = coin() ? OptimizationType::Min : OptimizationType::Max;
    const int measures = uniformInt(1, 4);
    for (int i = 0; i < measures; ++i) s.measures.push_back({"m" + std::to_string(i), std::string(kMeasureTypeName)});
    const int knobs = uniformInt(1, static_cast<int>(maxKnobs));
    for (int i = 0; i < knobs; ++i) {
      KnobDecl k;
      k.name = "k" + std::to_string(i);
      k.range = range(static_cast<std::size_t>(uniformInt(1, static_cast<int>(maxValues))));
      if (coin()) k.reference = pick(k.range);
      s.knobs.push_back(std::move(k));
    }
    const auto mnames = s.measureNames();
    s.objective = numeric(mnames, false, 3);
    if (coin(constraintProbability)) {
      s.constraintMeasure = pick(mnames);
      s.constraintGoal = number();
    }
    if (coin(0.6)) s.knobConstraint = boolean(s.knobNames(), 2);
    return s;
  }

  /// Model with `rows` rows over one knob "k" and the given measures; every
  /// measure value is positive.
  ControllerModel model(std::size_t rows, std::size_t measures) {
    ControllerModel m;
    m.knobNames = {"k"};
    for (std::size_t j = 0; j < measures; ++j) m.measureNames.push_back("m" + std::to_string(j));
    for (std::size_t i = 0; i < rows; ++i) {
      ModelRow r;
      r.id = i;
      r.knobs = {static_cast<double>(i)};
      for (std::size_t j = 0; j < measures; ++j) {
        // A coarse grid now and then so that ties and exact hits occur.
        r.measures.push_back(coin(0.2) ? static_cast<double>(uniformInt(1, 8)) : uniformReal(0.1, 10.0));
      }
      m.rows.push_back(std::move(r));
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

/// Intent matching a Generator::model: objective over the measures, the
/// constraint on m0.
inline IntentSpec modelIntent(const ControllerModel& m, OptimizationType dir, const Expr& objective, double goal) {
  IntentSpec s;
  s.name = "random";
  s.optimization = dir;
  s.objective = objective;
  for (const auto& n : m.measureNames) s.measures.push_back({n, std::string(kMeasureTypeName)});
  s.constraintMeasure = m.measureNames.front();
  s.constraintGoal = Number::real(goal);
  KnobDecl k;
  k.name = "k";
  for (const auto& r : m.rows) k.range.push_back(Number::integer(r.knobs[0]));
  s.knobs.push_back(std::move(k));
  validateIntent(s);
  return s;
}

inline bool closeRel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace fast::testing
