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

// Seedable randomness for test-state generation and optimizer restarts.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Uniform doubles take the top 53 bits of each draw and normal
// deviates use the Box-Muller transform, both implemented here rather than
// through <random> distributions (whose algorithms are left to the standard
// library vendor), so a seed reproduces the same states on every platform.

#include <cstdint>
#include <optional>
#include <random>

#include "alphaconc/qmat.hpp"

namespace alphaconc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for a sub-task (e.g. restart `index` of a run seeded
  /// with `seed`), derived by SplitMix64 mixing.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal deviate.
  double normal();
  /// Complex normal with E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// rows x cols matrix with i.i.d. complex_normal entries.
ComplexMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with the phases of
/// R's diagonal folded back into Q).
ComplexMatrix haar_unitary(int n, Rng& rng);

/// First `cols` columns of a Haar unitary of size `rows`.
ComplexMatrix haar_isometry(int rows, int cols, Rng& rng);

}  // namespace alphaconc
