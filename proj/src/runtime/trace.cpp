// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/runtime/trace.hpp"

#include <algorithm>

#include "fast/csv.hpp"
#include "fast/errors.hpp"

namespace fast {

namespace {

std::size_t indexOf(const std::vector<std::string>& names, std::string_view name, std::string_view what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw SchemaMismatch("trace has no " + std::string(what) + " column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

std::size_t Trace::measureColumn(std::string_view name) const { return indexOf(measureNames, name, "measure"); }

std::size_t Trace::knobColumn(std::string_view name) const { return indexOf(knobNames, name, "knob"); }

std::vector<double> Trace::column(std::string_view measure) const {
  const std::size_t c = measureColumn(measure);
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.measures[c]);
  return out;
}

std::string renderTrace(const Trace& trace) {
  CsvTable t;
  t.header.push_back("iteration");
  t.header.insert(t.header.end(), trace.knobNames.begin(), trace.knobNames.end());
  t.header.insert(t.header.end(), trace.measureNames.begin(), trace.measureNames.end());
  for (const auto& r : trace.records) {
    std::vector<double> row{static_cast<double>(r.iteration)};
    row.insert(row.end(), r.knobs.begin(), r.knobs.end());
    row.insert(row.end(), r.measures.begin(), r.measures.end());
    t.rows.push_back(std::move(row));
  }
  return renderCsv(t);
}

Trace parseTrace(std::string_view text, const std::vector<std::string>& measureNames, std::string_view sourceName) {
  const CsvTable t = parseCsv(text, sourceName);
  if (t.header.empty() || t.header.front() != "iteration") {
    throw SchemaMismatch(std::string(sourceName) + ": trace must start with an 'iteration' column");
  }
  Trace trace;
  std::vector<std::size_t> knobCols;
  std::vector<std::size_t> measureCols;
  for (std::size_t c = 1; c < t.header.size(); ++c) {
    const bool isMeasure = std::find(measureNames.begin(), measureNames.end(), t.header[c]) != measureNames.end();
    if (!isMeasure) {
      trace.knobNames.push_back(t.header[c]);
      knobCols.push_back(c);
    }
  }
  for (const auto& m : measureNames) {
    auto it = std::find(t.header.begin(), t.header.end(), m);
    if (it == t.header.end()) throw SchemaMismatch(std::string(sourceName) + ": missing measure column '" + m + "'");
    trace.measureNames.push_back(m);
    measureCols.push_back(static_cast<std::size_t>(it - t.header.begin()));
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (row[0] != static_cast<double>(i)) {
      throw SchemaMismatch(std::string(sourceName) + ": iterations are not contiguous from 0");
    }
    TraceRecord r;
    r.iteration = i;
    for (auto c : knobCols) r.knobs.push_back(row[c]);
    for (auto c : measureCols) r.measures.push_back(row[c]);
    trace.records.push_back(std::move(r));
  }
  return trace;
}

Trace loadTrace(const std::filesystem::path& path, const std::vector<std::string>& measureNames) {
  return parseTrace(readTextFile(path), measureNames, path.string());
}

void saveTrace(const Trace& trace, const std::filesystem::path& path) { writeFileAtomic(path, renderTrace(trace)); }

}  // namespace fast
