// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <vector>

#include "fast/intent/intent.hpp"
#include "fast/lint/manifest.hpp"

namespace fast {

using NameSet = std::set<std::string, std::less<>>;

/// Symmetric difference of the intent's knobs and the declared knobs.
NameSet findUnused(const IntentSpec& intent, const KnobManifest& manifest);
NameSet findUnused(const NameSet& intentKnobs, const NameSet& declared);

/// Declared but not captured.
NameSet findUncaptured(const KnobManifest& manifest);

/// Captured knobs that reach no effect-bearing node. Throws MissingDataflow
/// when the manifest has no edges.
NameSet findUnaffected(const KnobManifest& manifest);

enum class Severity { Warning, Error };

struct LintFinding {
  std::string knob;
  std::string kind;  // "unused", "uncaptured", "unaffected"
  Severity severity = Severity::Warning;
  std::string message;
};

struct LintReport {
  NameSet unused;
  NameSet uncaptured;
  NameSet unaffected;
  bool dataflowChecked = true;
  std::vector<LintFinding> findings;

  bool clean() const noexcept { return unused.empty() && uncaptured.empty() && unaffected.empty(); }
};

LintReport lint(const IntentSpec& intent, const KnobManifest& manifest);
std::string renderLintReport(const LintReport& report);

}  // namespace fast
