// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/oracles/verdict.hpp"

#include <cmath>

namespace fast {

std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Invalid: return "INVALID";
  }
  return "?";
}

Verdict verdictA(const TraceMetrics& fast, const TraceMetrics& oracle, OptimizationType direction,
                 const VerdictConfig& cfg) {
  const bool fastMeets = fast.mape <= cfg.T;
  if (oracle.mape > cfg.T) return fastMeets ? Verdict::Pass : Verdict::Invalid;
  if (!fastMeets) return Verdict::Fail;
  const bool atLeastAsGood = direction == OptimizationType::Min
                                 ? fast.cumulativeObjective <= oracle.cumulativeObjective
                                 : fast.cumulativeObjective >= oracle.cumulativeObjective;
  return atLeastAsGood ? Verdict::Pass : Verdict::Fail;
}

Verdict verdictB(const TraceMetrics& fast, const TraceMetrics& oracle, OptimizationType direction,
                 const VerdictConfig& cfg) {
  if (fast.mape > cfg.TE) return Verdict::Fail;
  if (oracle.mape > cfg.TE) return Verdict::Pass;
  const double sign = direction == OptimizationType::Min ? -1.0 : 1.0;
  const double advantage = objectiveAdvantage(sign * oracle.cumulativeObjective, sign * fast.cumulativeObjective);
  const bool close = std::fabs(oracle.mape - fast.mape) < cfg.TE && advantage < cfg.TF;
  return close ? Verdict::Pass : Verdict::Fail;
}

}  // namespace fast
