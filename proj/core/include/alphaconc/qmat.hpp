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

// Dense complex linear algebra used throughout the library. Matrices are
// small (side at most a few hundred), so everything is dense and computed with
// Eigen's self-adjoint eigensolver and SVD.

#include <complex>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace alphaconc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hermiticity tolerance on the Frobenius norm of M - M^dagger.
inline constexpr double kHermitianTol = 1e-9;
/// Eigenvalues below -kNegativeEigenTol make a matrix "not PSD".
inline constexpr double kNegativeEigenTol = 1e-10;
/// Default rank tolerance, relative to the largest eigenvalue.
inline constexpr double kRelativeRankTol = 1e-9;

struct HermitianSpectrum {
  RealVector eigenvalues;     // nonincreasing
  ComplexMatrix eigenvectors; // column k pairs with eigenvalues[k]
};

enum class Symmetrize { kNo, kYes };

/// Builds a rows x cols matrix from row-major entries.
ComplexMatrix from_row_major(int rows, int cols, std::span<const Complex> entries);

double hermiticity_defect(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted
/// nonincreasing. Ties keep the solver's original index order so results are
/// reproducible bit for bit.
///
/// With Symmetrize::kYes the input is replaced by (M + M^dagger)/2 first;
/// otherwise a defect above kHermitianTol throws NotHermitianError.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m, Symmetrize symmetrize = Symmetrize::kNo);

/// Eigenvalues only, same ordering and checks as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& m, Symmetrize symmetrize = Symmetrize::kNo);

/// Nonincreasing singular values; min(rows, cols) of them.
RealVector singular_values(const ComplexMatrix& m);

/// Sum of singular values, i.e. Tr sqrt(M M^dagger).
double trace_norm(const ComplexMatrix& m);

/// Rank tolerance used when none is given: kRelativeRankTol times the
/// largest eigenvalue (zero for an all-nonpositive spectrum).
double default_rank_tol(const RealVector& nonincreasing_eigenvalues);

/// Sum of lambda^alpha over the eigenvalues of a PSD matrix that exceed
/// rank_tol. Eigenvalues in (-1e-10, rank_tol] contribute nothing, which makes
/// alpha = 0 return the numerical rank. alpha must lie in [0, 1/2].
double trace_power(const ComplexMatrix& m, double alpha, std::optional<double> rank_tol = std::nullopt);

/// Same as trace_power, on an already computed nonincreasing spectrum.
double trace_power_of_spectrum(const RealVector& eigenvalues, double alpha,
                               std::optional<double> rank_tol = std::nullopt);

}  // namespace alphaconc
