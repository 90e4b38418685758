// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/errors.hpp"

namespace fast {

namespace {

std::string syntaxMessage(const SourcePosition& pos, const std::vector<std::string>& expected,
                          const std::string& found) {
  std::string msg = "syntax error at line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) +
                    ": expected ";
  if (expected.size() > 1) msg += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(SourcePosition pos, std::vector<std::string> expected, std::string found)
    : Error(syntaxMessage(pos, expected, found)),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace fast
