// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "fast/intent/intent.hpp"

namespace fast {

/// Name -> value bindings for the direct tree-walking evaluator.
struct Environment {
  std::map<std::string, double, std::less<>> measures;
  std::map<std::string, double, std::less<>> knobs;
};

/// Reference semantics of expressions: recursive evaluation straight off the
/// tree. Unbound names evaluate to NaN. Booleans are not numbers; asking for
/// the numeric value of a comparison throws ValidationError.
double interpretNumeric(const Expr& e, const Environment& env);
bool interpretBoolean(const Expr& e, const Environment& env);

}  // namespace fast
