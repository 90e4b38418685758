// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fast/demo/apps.hpp"
#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"
#include "fast/lint/lint.hpp"
#include "fast/lint/manifest.hpp"
#include "test_support.hpp"

using namespace fast;
using fast::testing::dataPath;

TEST_CASE("manifest: parse and render") {
  const KnobManifest m = loadManifest(dataPath("knob_defects.manifest"));
  CHECK(m.declared == NameSet{"affected", "uncaptured", "unaffected"});
  CHECK(m.captured == NameSet{"affected", "unaffected"});
  REQUIRE(m.edges);
  CHECK(m.edges->size() == 5);
  CHECK((*m.edges)[3] == DataflowEdge{"unaffected", "sleepDuration", EdgeTag::Inert});
  CHECK(parseManifest(renderManifest(m)) == m);

  CHECK_THROWS_AS(parseManifest("declared:\n a\ncaptured:\n b\n"), Error);
  CHECK_THROWS_AS(parseManifest("declared:\n a\nedges:\n a => b\n"), Error);
  CHECK_FALSE(parseManifest("declared: a, b\ncaptured: a\n").edges.has_value());
}

TEST_CASE("lint: the three defect classes") {
  const IntentSpec intent = loadIntentFile(dataPath("knob_defects.intent"));
  const KnobManifest m = loadManifest(dataPath("knob_defects.manifest"));
  CHECK(findUnused(intent, m) == NameSet{"unused"});
  CHECK(findUncaptured(m) == NameSet{"uncaptured"});
  CHECK(findUnaffected(m) == NameSet{"unaffected"});

  const LintReport r = lint(intent, m);
  CHECK_FALSE(r.clean());
  CHECK(r.findings.size() == 3);
  const std::string text = renderLintReport(r);
  CHECK(text.find("unused") != std::string::npos);
  CHECK(text.find("unaffected") != std::string::npos);
}

TEST_CASE("lint: set formulas") {
  CHECK(findUnused(NameSet{"a", "b"}, NameSet{"a", "b"}).empty());
  CHECK(findUnused(NameSet{"a"}, NameSet{"a", "debugKnob"}) == NameSet{"debugKnob"});
  CHECK(findUnused(NameSet{"a", "x"}, NameSet{"a", "y"}) == findUnused(NameSet{"a", "y"}, NameSet{"a", "x"}));

  KnobManifest m = ManifestBuilder().declare("a").declare("b").capture("a").capture("b").build();
  CHECK(findUncaptured(m).empty());
  CHECK_THROWS_AS(findUnaffected(m), MissingDataflow);
  m = ManifestBuilder()
          .declare("a")
          .declare("b")
          .capture("a")
          .capture("b")
          .sink("a", "loopBound")
          .flow("loopBound", "body")
          .build();
  CHECK(findUnaffected(m) == NameSet{"b"});
  m = ManifestBuilder().declare("a").declare("b").build();
  CHECK(findUncaptured(m) == NameSet{"a", "b"});

  // An uncaptured knob is never reported as unaffected as well.
  m = ManifestBuilder().declare("a").declare("b").capture("a").inert("a", "x").inert("b", "y").build();
  CHECK(findUnaffected(m) == NameSet{"a"});
}

TEST_CASE("lint: missing dataflow only skips that analysis") {
  const IntentSpec intent = parseIntent("intent t min(m) measures m: Double knobs a = [1] b = [1]");
  const LintReport r = lint(intent, parseManifest("declared: a, b\ncaptured: a\n"));
  CHECK_FALSE(r.dataflowChecked);
  CHECK(r.uncaptured == NameSet{"b"});
  CHECK(r.unaffected.empty());
}

TEST_CASE("lint: clean incrementer") {
  const IntentSpec intent = fast::testing::incrementerIntent();
  CHECK(lint(intent, loadManifest(dataPath("incrementer.manifest"))).clean());
  const KnobManifest generated = demo::appManifest("incrementer");
  CHECK(generated.declared == NameSet{"coreFrequency", "step", "threshold"});
  const LintReport r = lint(intent, generated);
  CHECK(r.clean());
  CHECK(r.findings.empty());
}
