// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>

#include "fast/intent/intent.hpp"

namespace fast {

/// Parses and validates intent source text.
///
/// The accepted language is
///
///   intent <name> (min|max) ( <expr> ) [ such that <measure> == <const> ]
///   measures { <measure> : Double }+
///   knobs { <knob> = [ <const>, ... ] [ reference <const> ] }+ [ such that <expr> ]
///
/// Identifiers inside the objective denote measures; inside the trailing
/// knob constraint they denote knobs. Throws SyntaxError or ValidationError.
IntentSpec parseIntent(std::string_view source);

IntentSpec loadIntentFile(const std::filesystem::path& path);

/// Parses a standalone objective expression (measure identifiers only). Not
/// validated against any measure list.
Expr parseObjectiveExpression(std::string_view source);

}  // namespace fast
