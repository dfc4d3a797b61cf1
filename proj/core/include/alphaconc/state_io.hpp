// Copyright 2026 The alphaconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON state files:
//
//   { "kind": "pure" | "mixed", "dims": [dimA, dimB], "data": [[re, im], ...] }
//
// "pure" carries dimA*dimB amplitudes, "mixed" the (dimA*dimB)^2 matrix
// entries, both row-major. Numbers are written with 17 significant digits so
// finite doubles survive a save/load round trip bit for bit.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "alphaconc/states.hpp"

namespace alphaconc {

using State = std::variant<PureState, DensityMatrix>;

/// Throws ParseError (not JSON), SchemaError (wrong shape or types) or
/// InvariantViolation (norm, trace, Hermiticity or PSD check fails).
State parse_state(std::string_view json_text);
/// As parse_state; IoError when the file cannot be read.
State load_state(const std::filesystem::path& path);

std::string format_state(const State& state);
/// IoError when the file cannot be written.
void save_state(const State& state, const std::filesystem::path& path);

/// Shortest-round-trip-safe rendering with 17 significant digits, independent
/// of the C locale.
std::string format_double17(double x);

}  // namespace alphaconc
