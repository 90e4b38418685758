// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fast {

struct TraceRecord {
  std::size_t iteration = 0;
  std::vector<double> knobs;     // ordered as Trace::knobNames
  std::vector<double> measures;  // ordered as Trace::measureNames
  /// Model row id of the applied configuration, when known.
  std::optional<std::size_t> configId;

  bool operator==(const TraceRecord&) const = default;
};

struct Trace {
  std::vector<std::string> knobNames;
  std::vector<std::string> measureNames;
  std::vector<TraceRecord> records;

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }
  std::size_t measureColumn(std::string_view name) const;
  std::size_t knobColumn(std::string_view name) const;
  /// One measure across all records.
  std::vector<double> column(std::string_view measure) const;

  bool operator==(const Trace&) const = default;
};

/// "iteration,<knobs...>,<measures...>" with round-trip-exact floats.
std::string renderTrace(const Trace& trace);

/// Splits columns into knobs and measures using the given measure names;
/// every other non-iteration column is a knob. Checks that iterations are
/// contiguous from 0. Throws SchemaMismatch.
Trace parseTrace(std::string_view text, const std::vector<std::string>& measureNames,
                 std::string_view sourceName = "<memory>");
Trace loadTrace(const std::filesystem::path& path, const std::vector<std::string>& measureNames);
void saveTrace(const Trace& trace, const std::filesystem::path& path);

}  // namespace fast
