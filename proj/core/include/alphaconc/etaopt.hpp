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

// Brute-force checks of the eta_alpha optimizations behind the isotropic and
// Werner closed forms, plus majorization utilities.
//
// The isotropic minimization runs over Schmidt vectors with n entries gamma^2
// and m entries delta^2 (gamma >= delta >= 0) subject to
//   n gamma^2 + m delta^2 = 1,   n gamma + m delta = sqrt(F d),
// with objective n gamma^(2 alpha) + m delta^(2 alpha) - 1.

#include <optional>
#include <vector>

#include "alphaconc/measures.hpp"
#include "alphaconc/states.hpp"

namespace alphaconc {

/// Tolerance for treating F*d as equal to an integer count.
inline constexpr double kIntegerVertexTol = 1e-9;

struct GammaDelta {
  double gamma = 0.0;
  double delta = 0.0;
};

struct EtaCandidate {
  int n = 1;
  int m = 0;
  double gamma = 0.0;
  double delta = 0.0;
  double value = 0.0;
};

/// Plus-branch solution of the two constraints for integer (n, m), or
/// nullopt when infeasible (F d > n + m, or F d < n). For m = 0 the only
/// feasible case is n = F d (within kIntegerVertexTol), giving gamma = 1/sqrt(n).
/// DomainError unless n >= 1, m >= 0, d >= 2 and 1/d < F <= 1.
std::optional<GammaDelta> gamma_delta(int n, int m, double fidelity, int d);

/// gamma_delta plus the objective value, nullopt when infeasible.
std::optional<EtaCandidate> eta_candidate(int n, int m, double fidelity, int d, AlphaParam alpha);

struct EtaSearch {
  double value = 0.0;                  // integer-grid minimum
  EtaCandidate best;                   // its minimizer
  std::vector<EtaCandidate> feasible;  // every feasible cell, n-major order
  double vertex_value = 0.0;           // (F d)^(1-alpha) - 1 at the continuous vertex n = F d, m = 0
};

/// Minimum over the integer cells of 1 <= n <= F d, F d <= n + m <= d.
/// Requires d >= 2 and 1/d < F <= 1.
EtaSearch eta_isotropic_bruteforce(int d, double fidelity, AlphaParam alpha);

/// (F d)^(1-alpha) - 1 for F > 1/d, else 0.
double eta_isotropic_closed(int d, double fidelity, AlphaParam alpha);
/// (2 W)^(1-alpha) - 1 for W > 1/2, else 0.
double eta_werner_closed(double weight, AlphaParam alpha);

/// The Werner problem reduced to two Schmidt values: the isotropic search at
/// d = 2, F = W. Requires 1/2 < W <= 1.
EtaSearch eta_werner_bruteforce(double weight, AlphaParam alpha);

/// (sum_i sqrt(lambda_i))^2 / 2, the largest Werner weight a pure state with
/// these Schmidt values can reach.
double werner_overlap_bound(const SchmidtVector& lambdas);

/// The rank-2 Schmidt vector with (sqrt l1 + sqrt l2)^2 = 2W, for 1/2 <= W <= 1.
SchmidtVector werner_rank2_schmidt(double weight);

/// True when x is majorized by y: every prefix sum of x (sorted nonincreasing,
/// zero padded) is <= the matching prefix sum of y within 1e-12, with the
/// totals equal.
bool majorization_check(const SchmidtVector& x, const SchmidtVector& y);

}  // namespace alphaconc
