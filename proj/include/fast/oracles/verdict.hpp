// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "fast/intent/intent.hpp"
#include "fast/oracles/metrics.hpp"
#include "fast/oracles/oracle.hpp"

namespace fast {

enum class Verdict { Pass, Fail, Invalid };

std::string_view name(Verdict v);

/// Decision tree against a single best fixed configuration. An F tie counts
/// as FAST being at least as good.
Verdict verdictA(const TraceMetrics& fast, const TraceMetrics& oracle, OptimizationType direction,
                 const VerdictConfig& cfg);

/// Decision tree against the iteration-wise oracle. The objective advantage
/// is taken on F oriented so that larger is better.
Verdict verdictB(const TraceMetrics& fast, const TraceMetrics& oracle, OptimizationType direction,
                 const VerdictConfig& cfg);

}  // namespace fast
