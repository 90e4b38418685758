// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/lint/lint.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

#include <spdlog/spdlog.h>

#include "fast/errors.hpp"

namespace fast {

NameSet findUnused(const NameSet& intentKnobs, const NameSet& declared) {
  NameSet out;
  std::set_symmetric_difference(intentKnobs.begin(), intentKnobs.end(), declared.begin(), declared.end(),
                                std::inserter(out, out.end()));
  return out;
}

NameSet findUnused(const IntentSpec& intent, const KnobManifest& manifest) {
  NameSet intentKnobs;
  for (const auto& k : intent.knobs) intentKnobs.insert(k.name);
  return findUnused(intentKnobs, manifest.declared);
}

NameSet findUncaptured(const KnobManifest& manifest) {
  NameSet out;
  std::set_difference(manifest.declared.begin(), manifest.declared.end(), manifest.captured.begin(),
                      manifest.captured.end(), std::inserter(out, out.end()));
  return out;
}

NameSet findUnaffected(const KnobManifest& manifest) {
  if (!manifest.edges) throw MissingDataflow("manifest has no dataflow edges");

  // Reverse graph over non-inert edges; walk back from every effect-bearing node.
  std::map<std::string_view, std::vector<std::string_view>> into;
  NameSet effect{std::string(kBodyNode)};
  for (const auto& e : *manifest.edges) {
    if (e.tag == EdgeTag::Inert) continue;
    into[e.to].push_back(e.from);
    if (e.tag == EdgeTag::Sink) effect.insert(e.to);
  }
  std::set<std::string_view> reaches;
  std::vector<std::string_view> stack(effect.begin(), effect.end());
  while (!stack.empty()) {
    const std::string_view n = stack.back();
    stack.pop_back();
    if (!reaches.insert(n).second) continue;
    if (auto it = into.find(n); it != into.end()) {
      for (auto src : it->second) stack.push_back(src);
    }
  }
  NameSet out;
  for (const auto& k : manifest.captured) {
    if (!reaches.contains(k)) out.insert(k);
  }
  return out;
}

LintReport lint(const IntentSpec& intent, const KnobManifest& manifest) {
  LintReport r;
  r.unused = findUnused(intent, manifest);
  r.uncaptured = findUncaptured(manifest);
  try {
    r.unaffected = findUnaffected(manifest);
  } catch (const MissingDataflow& e) {
    spdlog::warn("unaffected-knob analysis skipped: {}", e.what());
    r.dataflowChecked = false;
  }
  for (const auto& k : r.unused) {
    const bool inIntent = intent.knobIndex(k).has_value();
    r.findings.push_back({k, "unused", inIntent ? Severity::Error : Severity::Warning,
                          inIntent ? "declared in the intent but never created by the application"
                                   : "created by the application but absent from the intent"});
  }
  for (const auto& k : r.uncaptured) {
    r.findings.push_back({k, "uncaptured", Severity::Error, "declared but not passed to optimize"});
  }
  for (const auto& k : r.unaffected) {
    r.findings.push_back({k, "unaffected", Severity::Warning, "captured but no effect-bearing node depends on it"});
  }
  return r;
}

std::string renderLintReport(const LintReport& report) {
  std::ostringstream out;
  auto list = [&](std::string_view label, const NameSet& s) {
    out << label << ": {";
    bool first = true;
    for (const auto& k : s) {
      out << (first ? "" : ", ") << k;
      first = false;
    }
    out << "}\n";
  };
  list("unused", report.unused);
  list("uncaptured", report.uncaptured);
  if (report.dataflowChecked) {
    list("unaffected", report.unaffected);
  } else {
    out << "unaffected: skipped (no dataflow edges)\n";
  }
  for (const auto& f : report.findings) {
    out << (f.severity == Severity::Error ? "error" : "warning") << ": knob '" << f.knob << "' is " << f.kind << ": "
        << f.message << '\n';
  }
  if (report.clean()) out << "no findings\n";
  return out.str();
}

}  // namespace fast
