// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fast {

/// Shortest decimal text that parses back to exactly `v`. Uses fixed
/// notation, so the output is also a valid intent-language literal.
std::string formatDouble(double v);

/// Like formatDouble but always carries a fractional part ("3" -> "3.0").
std::string formatFloatLiteral(double v);

/// Parses the whole of `text` as a double; nullopt on trailing garbage.
std::optional<double> parseDouble(std::string_view text);

}  // namespace fast
