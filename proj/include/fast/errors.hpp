// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fast {

/// Base of every error raised by the runtime and its tools.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourcePosition {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePosition&) const = default;
};

/// Malformed intent text. Carries where parsing stopped and which tokens
/// would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(SourcePosition pos, std::vector<std::string> expected, std::string found);

  const SourcePosition& position() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  SourcePosition pos_;
  std::vector<std::string> expected_;
  std::string found_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class EmptyConfigurationSpace : public Error {
 public:
  using Error::Error;
};

class DuplicateKnob : public Error {
 public:
  using Error::Error;
};

class InvalidRestriction : public Error {
 public:
  using Error::Error;
};

class EmptyRestriction : public Error {
 public:
  using Error::Error;
};

class IntentNotFound : public Error {
 public:
  using Error::Error;
};

class MissingMeasure : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroGoal : public Error {
 public:
  using Error::Error;
};

class EmptyAvailability : public Error {
 public:
  using Error::Error;
};

class MissingDataflow : public Error {
 public:
  using Error::Error;
};

class NonPositiveMeasure : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace fast
