// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "fast/intent/intent.hpp"

namespace fast {

/// Canonical intent text. parseIntent(printIntent(s)) == s for every valid s.
std::string printIntent(const IntentSpec& spec);

/// Minimal-parenthesis rendering of an expression; reparses to the same tree.
std::string printExpr(const Expr& e);

std::string printNumber(const Number& n);

}  // namespace fast
