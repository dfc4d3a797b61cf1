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

// The alphaconc command line, callable in-process so tests can drive it.
//
//   alphaconc measure   --state FILE [--alpha A] [--roof ...]
//   alphaconc sweep     --family isotropic|werner [--d D] [--alpha A,...] ...
//   alphaconc roof      --state FILE [--alpha A] [--restarts N] ...
//   alphaconc eta       --d D (--fidelity F | --werner W) [--alpha A]
//   alphaconc crossover
//
// Exit codes: 0 success, 2 usage, I/O or schema errors, 3 domain or
// validation errors, 4 roof search that hit its iteration budget (the best
// value found is still printed).

#include <iosfwd>
#include <string>
#include <vector>

namespace alphaconc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitNotConverged = 4;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point rendering with 10 decimals, as used in text reports.
std::string format_fixed10(double x);

}  // namespace alphaconc::cli
