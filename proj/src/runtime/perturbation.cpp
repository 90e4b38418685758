// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/runtime/perturbation.hpp"

#include <algorithm>
#include <sstream>

#include "fast/csv.hpp"
#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"
#include "fast/numfmt.hpp"

namespace fast {

namespace {

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

double number(std::string_view text, std::size_t line) {
  auto v = parseDouble(text);
  if (!v) throw Error("perturbation line " + std::to_string(line) + ": '" + std::string(text) + "' is not a number");
  return *v;
}

PerturbationKind kindOf(std::string_view s, std::size_t line) {
  for (auto k : {PerturbationKind::Goal, PerturbationKind::ConstraintMeasure, PerturbationKind::OptimizationType,
                 PerturbationKind::Objective, PerturbationKind::Restrict, PerturbationKind::Control}) {
    if (name(k) == s) return k;
  }
  throw Error("perturbation line " + std::to_string(line) + ": unknown kind '" + std::string(s) + "'");
}

}  // namespace

std::string_view name(PerturbationKind k) {
  switch (k) {
    case PerturbationKind::Goal: return "goal";
    case PerturbationKind::ConstraintMeasure: return "constraintMeasure";
    case PerturbationKind::OptimizationType: return "optimizationType";
    case PerturbationKind::Objective: return "objective";
    case PerturbationKind::Restrict: return "restrict";
    case PerturbationKind::Control: return "control";
  }
  return "?";
}

PerturbationScript parsePerturbationScript(std::string_view text) {
  PerturbationScript script;
  std::size_t lineNo = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineNo;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw Error("perturbation line " + std::to_string(lineNo) + ": expected 'iteration,kind,payload'");
    }
    const std::string_view iterText = trim(line.substr(0, c1));
    if (iterText == "iteration") continue;  // header

    Perturbation p;
    const double it = number(iterText, lineNo);
    if (it < 0 || it != static_cast<double>(static_cast<std::size_t>(it))) {
      throw Error("perturbation line " + std::to_string(lineNo) + ": iteration must be a non-negative integer");
    }
    p.iteration = static_cast<std::size_t>(it);
    p.kind = kindOf(trim(line.substr(c1 + 1, c2 - c1 - 1)), lineNo);
    p.payload = std::string(trim(line.substr(c2 + 1)));
    const auto w = words(p.payload);
    auto need = [&](bool ok) {
      if (!ok) {
        throw Error("perturbation line " + std::to_string(lineNo) + ": bad payload for " +
                    std::string(name(p.kind)));
      }
    };
    switch (p.kind) {
      case PerturbationKind::Goal:
        need(w.size() == 1);
        p.goal = number(w[0], lineNo);
        break;
      case PerturbationKind::ConstraintMeasure:
        need(w.size() == 1 || w.size() == 2);
        p.name = w[0];
        if (w.size() == 2) p.newGoal = number(w[1], lineNo);
        break;
      case PerturbationKind::OptimizationType:
        need(w.size() == 1 && (w[0] == "min" || w[0] == "max"));
        p.optimization = w[0] == "min" ? OptimizationType::Min : OptimizationType::Max;
        break;
      case PerturbationKind::Objective:
        need(!w.empty());
        p.objective = parseObjectiveExpression(p.payload);
        break;
      case PerturbationKind::Restrict:
        need(!w.empty());
        p.name = w[0];
        if (w.size() > 1) {
          std::vector<double> vals;
          for (std::size_t i = 1; i < w.size(); ++i) vals.push_back(number(w[i], lineNo));
          p.values = std::move(vals);
        }
        break;
      case PerturbationKind::Control:
        need(w.size() == 1);
        p.name = w[0];
        break;
    }
    script.events.push_back(std::move(p));
  }
  std::stable_sort(script.events.begin(), script.events.end(),
                   [](const Perturbation& a, const Perturbation& b) { return a.iteration < b.iteration; });
  return script;
}

PerturbationScript loadPerturbationScript(const std::filesystem::path& path) {
  return parsePerturbationScript(readTextFile(path));
}

void applyToIntent(IntentSpec& spec, const Perturbation& p) {
  IntentSpec next = spec;
  auto goalNumber = [](double g) {
    return g == static_cast<double>(static_cast<long long>(g)) ? Number::integer(g) : Number::real(g);
  };
  switch (p.kind) {
    case PerturbationKind::Goal:
      if (!next.constrained()) throw ValidationError("goal change on an unconstrained intent");
      next.constraintGoal = goalNumber(p.goal);
      break;
    case PerturbationKind::ConstraintMeasure:
      next.constraintMeasure = p.name;
      if (p.newGoal) {
        next.constraintGoal = goalNumber(*p.newGoal);
      } else if (!next.constraintGoal) {
        throw ValidationError("constraint measure change needs a goal on an unconstrained intent");
      }
      break;
    case PerturbationKind::OptimizationType: next.optimization = p.optimization; break;
    case PerturbationKind::Objective: next.objective = p.objective; break;
    case PerturbationKind::Restrict:
    case PerturbationKind::Control: return;
  }
  validateIntent(next);
  spec = std::move(next);
}

}  // namespace fast
