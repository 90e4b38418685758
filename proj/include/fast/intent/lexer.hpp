// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fast/errors.hpp"

namespace fast {

enum class TokenKind {
  Identifier,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Assign,
  Plus,
  Minus,
  Star,
  Slash,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  EqualEqual,
  NotEqual,
  AndAnd,
  OrOr,
  Bang,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePosition pos;
};

std::string_view describe(TokenKind kind);

/// Splits intent source into tokens. Whitespace separates tokens and `//`
/// starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view source);

}  // namespace fast
