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

#include "alphaconc/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "alphaconc/errors.hpp"

namespace alphaconc {
namespace {

// singular_values: inputs Hermitian to this relative precision take the
// eigenvalue path; JacobiSVD handles the rest up to kJacobiLimit.
constexpr double kSvdHermitianTol = 1e-14;
constexpr Eigen::Index kJacobiLimit = 64;

ComplexMatrix checked_hermitian(const ComplexMatrix& m, Symmetrize symmetrize) {
  if (m.rows() != m.cols()) {
    throw NonSquareError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected square");
  }
  if (symmetrize == Symmetrize::kYes) {
    return (m + m.adjoint()) / 2.0;
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw NotHermitianError("||M - M^dagger||_F = " + std::to_string(defect) + " exceeds tolerance");
  }
  return m;
}

// Eigen returns ascending eigenvalues; reorder to nonincreasing with a stable
// sort so equal eigenvalues keep their original relative order.
std::vector<Eigen::Index> descending_order(const RealVector& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values[a] > values[b]; });
  return order;
}

}  // namespace

ComplexMatrix from_row_major(int rows, int cols, std::span<const Complex> entries) {
  if (rows <= 0 || cols <= 0 || entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw DomainError("row-major data does not match the declared shape");
  }
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    }
  }
  return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NonSquareError("hermiticity is only defined for square matrices");
  }
  return (m - m.adjoint()).norm();
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& m, Symmetrize symmetrize) {
  const ComplexMatrix h = checked_hermitian(m, symmetrize);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  const RealVector& ascending = solver.eigenvalues();
  const auto order = descending_order(ascending);

  HermitianSpectrum out;
  out.eigenvalues.resize(ascending.size());
  out.eigenvectors.resize(h.rows(), h.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    out.eigenvalues[idx] = ascending[order[k]];
    out.eigenvectors.col(idx) = solver.eigenvectors().col(order[k]);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m, Symmetrize symmetrize) {
  const ComplexMatrix h = checked_hermitian(m, symmetrize);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  RealVector values = solver.eigenvalues();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) {
    return RealVector();
  }
  RealVector values;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= kSvdHermitianTol * scale) {
    // Hermitian input: singular values are the absolute eigenvalues. BDCSVD
    // loses accuracy on the heavily degenerate spectra of partial transposes.
    values = Eigen::SelfAdjointEigenSolver<ComplexMatrix>((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly)
                 .eigenvalues()
                 .cwiseAbs();
  } else if (std::min(m.rows(), m.cols()) <= kJacobiLimit) {
    values = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  } else {
    values = Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

double default_rank_tol(const RealVector& nonincreasing_eigenvalues) {
  if (nonincreasing_eigenvalues.size() == 0) {
    return 0.0;
  }
  return kRelativeRankTol * std::max(0.0, nonincreasing_eigenvalues[0]);
}

double trace_power_of_spectrum(const RealVector& eigenvalues, double alpha, std::optional<double> rank_tol) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    throw DomainError("trace_power requires alpha in [0, 1/2]");
  }
  double largest = 0.0;
  for (double v : eigenvalues) {
    if (v < -kNegativeEigenTol) {
      throw NotPsdError("eigenvalue " + std::to_string(v) + " below -1e-10");
    }
    largest = std::max(largest, v);
  }
  const double tol = rank_tol.value_or(kRelativeRankTol * largest);
  double total = 0.0;
  for (double v : eigenvalues) {
    if (v > tol) {
      total += std::pow(v, alpha);
    }
  }
  return total;
}

double trace_power(const ComplexMatrix& m, double alpha, std::optional<double> rank_tol) {
  return trace_power_of_spectrum(hermitian_eigenvalues(m), alpha, rank_tol);
}

}  // namespace alphaconc
