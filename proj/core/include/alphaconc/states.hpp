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

// Bipartite states on C^dimA (x) C^dimB.
//
// Index convention, used by every function here: the product basis vector
// |i j> has composite index i * dimB + j, and matrices are addressed
// rho(i * dimB + j, k * dimB + l) = <ij| rho |kl>.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "alphaconc/qmat.hpp"
#include "alphaconc/random.hpp"

namespace alphaconc {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Largest Schmidt mass the rank tolerance may discard.
inline constexpr double kSchmidtMassTol = 1e-8;

struct Dims {
  int a = 1;
  int b = 1;

  int total() const { return a * b; }
  bool square() const { return a == b; }
  bool operator==(const Dims&) const = default;
};

class PureState {
 public:
  /// Throws InvariantViolation unless the amplitudes have unit norm within
  /// kNormTol, DomainError on a size mismatch.
  PureState(Dims dims, ComplexVector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(Dims dims, ComplexVector amplitudes);

  const Dims& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  /// dimA x dimB matrix with entry (i, j) = <ij|psi>.
  ComplexMatrix coefficients() const;
  /// |psi><psi|.
  ComplexMatrix projector() const;

 private:
  Dims dims_;
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity (kHermitianTol), unit trace (kTraceTol) and
  /// eigenvalues >= -kNegativeEigenTol; throws InvariantViolation otherwise.
  DensityMatrix(Dims dims, ComplexMatrix matrix);

  static DensityMatrix from_pure(const PureState& psi);

  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  Dims dims_;
  ComplexMatrix matrix_;
};

/// Squared Schmidt coefficients in nonincreasing order, all positive.
class SchmidtVector {
 public:
  /// Accepts any nonnegative weights summing to 1 within kNormTol; zeros are
  /// dropped and the rest sorted nonincreasing. Throws DomainError otherwise.
  explicit SchmidtVector(std::vector<double> lambdas);

  std::span<const double> lambdas() const { return lambdas_; }
  int rank() const { return static_cast<int>(lambdas_.size()); }
  double operator[](int i) const { return lambdas_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> lambdas_;
};

/// Squared singular values of the coefficient matrix above rank_tol (default:
/// kRelativeRankTol times the largest one), renormalized to sum 1. Throws
/// RankTolTooAggressiveError if more than kSchmidtMassTol is discarded.
SchmidtVector schmidt(const PureState& psi, std::optional<double> rank_tol = std::nullopt);

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, Dims dims);
ComplexMatrix partial_trace_b(const DensityMatrix& rho);

/// rho^Gamma: entry (i*dimB + l, k*dimB + j) = rho_{ij,kl}. An involution.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims);
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// R(rho), a dimA^2 x dimB^2 matrix with entry (i*dimA + k, j*dimB + l) = rho_{ij,kl}.
ComplexMatrix realign(const ComplexMatrix& rho, Dims dims);
ComplexMatrix realign(const DensityMatrix& rho);

/// (1/sqrt d) sum_i |ii>.
PureState max_entangled(int d);

/// Isotropic state (1-F)/(d^2-1) (I - |Psi><Psi|) + F |Psi><Psi|.
DensityMatrix isotropic(int d, double fidelity);

/// Werner state with weight W on the antisymmetric subspace, built from the
/// symmetric projectors |kk> and |Psi+_ij> and the antisymmetric |Psi-_ij>.
DensityMatrix werner(int d, double weight);

/// Projector onto the antisymmetric subspace, sum_{i<j} |Psi-_ij><Psi-_ij|.
ComplexMatrix antisymmetric_projector(int d);

/// <Psi|rho|Psi> for the maximally entangled Psi (requires dimA == dimB).
double isotropic_fidelity(const DensityMatrix& rho);
/// Tr(rho * antisymmetric_projector) (requires dimA == dimB).
double werner_weight(const DensityMatrix& rho);

/// (U_A (x) U_B) |psi>.
PureState apply_local(const PureState& psi, const ComplexMatrix& ua, const ComplexMatrix& ub);

/// Haar-random pure state: a normalized complex Gaussian vector.
PureState random_pure(Dims dims, Rng& rng);
PureState random_pure(Dims dims, std::uint64_t seed);

/// Random mixed state G G^dagger / Tr(G G^dagger) with G a dims.total() x rank
/// Ginibre matrix (rank 0 means full rank).
DensityMatrix random_mixed(Dims dims, Rng& rng, int rank = 0);

}  // namespace alphaconc
