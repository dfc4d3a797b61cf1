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

// Closed-form entanglement quantities built around the alpha-concurrence
// C_alpha(psi) = Tr rho_A^alpha - 1, 0 <= alpha <= 1/2.

#include "alphaconc/states.hpp"

namespace alphaconc {

/// The measure's parameter; construction rejects values outside [0, 1/2].
class AlphaParam {
 public:
  explicit AlphaParam(double alpha);
  double value() const { return alpha_; }

 private:
  double alpha_;
};

enum class BoundBranch { kPpt, kRealignment, kBoth };

const char* to_string(BoundBranch branch);

/// PPT / realignment lower bound on C_alpha(rho).
struct BoundReport {
  double ppt_norm = 0.0;      // ||rho^Gamma||_1
  double realign_norm = 0.0;  // ||R(rho)||_1
  double lower_bound = 0.0;
  BoundBranch branch = BoundBranch::kBoth;
};

/// Relative gap below which the two criterion norms count as tied.
inline constexpr double kBranchTieTol = 1e-10;

/// sum_i lambda_i^alpha - 1.
double alpha_concurrence_schmidt(const SchmidtVector& lambdas, AlphaParam alpha);

/// Tr rho_A^alpha - 1 through the reduced density matrix of psi. Agrees with
/// alpha_concurrence_schmidt(schmidt(psi), alpha) to roundoff.
double alpha_concurrence_pure(const PureState& psi, AlphaParam alpha);

/// q-concurrence 1 - Tr rho_A^q, q >= 2 (DomainError otherwise).
double q_concurrence_pure(const PureState& psi, double q);

/// Pure-state concurrence sqrt(2 (1 - Tr rho_A^2)).
double concurrence_pure(const PureState& psi);

/// (d^(1-alpha) - 1)/(d - 1) * max(0, max(||rho^Gamma||_1, ||R(rho)||_1) - 1).
/// Requires dimA == dimB >= 2.
BoundReport lower_bound_alpha(const DensityMatrix& rho, AlphaParam alpha);

/// Exact C_alpha of the isotropic state with fidelity F.
double isotropic_alpha(int d, double fidelity, AlphaParam alpha);
/// Exact C_alpha of the Werner state with antisymmetric weight W (any d).
double werner_alpha(double weight, AlphaParam alpha);

/// sqrt(2/(d(d-1))) (dF - 1) above F = 1/d, else 0.
double isotropic_concurrence(int d, double fidelity);
/// 2W - 1 above W = 1/2, else 0.
double werner_concurrence(double weight);
/// H2((1 - 2 sqrt(W(1-W)))/2) above W = 1/2, else 0.
double werner_eof(double weight);

/// Binary entropy in bits, with H2(0) = H2(1) = 0.
double binary_entropy(double x);

/// (sum_i lambda_i^alpha - 1) / (r^(1-alpha) - 1); DomainError for rank 1.
double g_ratio(const SchmidtVector& lambdas, AlphaParam alpha);

/// Dimension d* above which the isotropic 1/2-concurrence prefactor
/// (sqrt d - 1)/(d - 1) exceeds the concurrence prefactor sqrt(2/(d(d-1))).
/// Bisection on (2, 20] down to `tolerance`.
double half_concurrence_crossover(double tolerance = 1e-6);

}  // namespace alphaconc
