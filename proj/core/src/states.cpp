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

#include "alphaconc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "alphaconc/errors.hpp"

namespace alphaconc {
namespace {

void require_dims(Dims dims) {
  if (dims.a < 1 || dims.b < 1) {
    throw DomainError("local dimensions must be positive");
  }
}

void require_matrix_shape(const ComplexMatrix& rho, Dims dims) {
  require_dims(dims);
  if (rho.rows() != dims.total() || rho.cols() != dims.total()) {
    throw DomainError("matrix side does not equal dimA * dimB");
  }
}

void require_family_dim(int d) {
  if (d < 2) {
    throw DomainError("state families need d >= 2, got " + std::to_string(d));
  }
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1]");
  }
}

int index(int i, int j, int dim_b) { return i * dim_b + j; }

}  // namespace

PureState::PureState(Dims dims, ComplexVector amplitudes) : dims_(dims), amplitudes_(std::move(amplitudes)) {
  require_dims(dims_);
  if (amplitudes_.size() != dims_.total()) {
    throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) + " does not equal dimA * dimB = " +
                      std::to_string(dims_.total()));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= kNormTol)) {
    throw InvariantViolation("pure state norm^2 = " + std::to_string(norm2) + ", expected 1");
  }
}

PureState PureState::normalized(Dims dims, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(dims, std::move(amplitudes));
}

ComplexMatrix PureState::coefficients() const {
  ComplexMatrix c(dims_.a, dims_.b);
  for (int i = 0; i < dims_.a; ++i) {
    for (int j = 0; j < dims_.b; ++j) {
      c(i, j) = amplitudes_[index(i, j, dims_.b)];
    }
  }
  return c;
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix) : dims_(dims), matrix_(std::move(matrix)) {
  require_matrix_shape(matrix_, dims_);
  if (!matrix_.allFinite()) {
    throw InvariantViolation("density matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > kHermitianTol) {
    throw InvariantViolation("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const double trace = matrix_.trace().real();
  if (!(std::abs(trace - 1.0) <= kTraceTol)) {
    throw InvariantViolation("density matrix trace = " + std::to_string(trace) + ", expected 1");
  }
  const RealVector eig = hermitian_eigenvalues(matrix_, Symmetrize::kYes);
  if (eig.size() > 0 && eig[eig.size() - 1] < -kNegativeEigenTol) {
    throw InvariantViolation("density matrix has eigenvalue " + std::to_string(eig[eig.size() - 1]));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) { return DensityMatrix(psi.dims(), psi.projector()); }

SchmidtVector::SchmidtVector(std::vector<double> lambdas) {
  double total = 0.0;
  for (double x : lambdas) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw DomainError("Schmidt weights must be finite and nonnegative");
    }
    total += x;
  }
  if (!(std::abs(total - 1.0) <= kNormTol)) {
    throw DomainError("Schmidt weights sum to " + std::to_string(total) + ", expected 1");
  }
  std::erase(lambdas, 0.0);
  std::stable_sort(lambdas.begin(), lambdas.end(), std::greater<>());
  lambdas_ = std::move(lambdas);
}

SchmidtVector schmidt(const PureState& psi, std::optional<double> rank_tol) {
  const RealVector s = singular_values(psi.coefficients());
  std::vector<double> lambdas(static_cast<std::size_t>(s.size()));
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    lambdas[static_cast<std::size_t>(k)] = s[k] * s[k];
  }
  const double largest = lambdas.empty() ? 0.0 : lambdas.front();
  const double tol = rank_tol.value_or(kRelativeRankTol * largest);

  std::vector<double> kept;
  double removed = 0.0;
  for (double x : lambdas) {
    if (x > tol) {
      kept.push_back(x);
    } else {
      removed += x;
    }
  }
  if (removed > kSchmidtMassTol || kept.empty()) {
    throw RankTolTooAggressiveError("rank tolerance discards Schmidt mass " + std::to_string(removed));
  }
  const double total = std::accumulate(kept.begin(), kept.end(), 0.0);
  for (double& x : kept) {
    x /= total;
  }
  return SchmidtVector(std::move(kept));
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, Dims dims) {
  require_matrix_shape(rho, dims);
  ComplexMatrix out = ComplexMatrix::Zero(dims.a, dims.a);
  for (int i = 0; i < dims.a; ++i) {
    for (int k = 0; k < dims.a; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < dims.b; ++j) {
        acc += rho(index(i, j, dims.b), index(k, j, dims.b));
      }
      out(i, k) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace_b(const DensityMatrix& rho) { return partial_trace_b(rho.matrix(), rho.dims()); }

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims) {
  require_matrix_shape(rho, dims);
  ComplexMatrix out(dims.total(), dims.total());
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) {
      for (int k = 0; k < dims.a; ++k) {
        for (int l = 0; l < dims.b; ++l) {
          out(index(i, l, dims.b), index(k, j, dims.b)) = rho(index(i, j, dims.b), index(k, l, dims.b));
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) { return partial_transpose(rho.matrix(), rho.dims()); }

ComplexMatrix realign(const ComplexMatrix& rho, Dims dims) {
  require_matrix_shape(rho, dims);
  ComplexMatrix out(dims.a * dims.a, dims.b * dims.b);
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) {
      for (int k = 0; k < dims.a; ++k) {
        for (int l = 0; l < dims.b; ++l) {
          out(i * dims.a + k, j * dims.b + l) = rho(index(i, j, dims.b), index(k, l, dims.b));
        }
      }
    }
  }
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) { return realign(rho.matrix(), rho.dims()); }

PureState max_entangled(int d) {
  require_family_dim(d);
  ComplexVector amps = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    amps[index(i, i, d)] = amp;
  }
  return PureState({d, d}, std::move(amps));
}

DensityMatrix isotropic(int d, double fidelity) {
  require_family_dim(d);
  require_unit_interval(fidelity, "isotropic fidelity F");
  const int n = d * d;
  const ComplexMatrix psi = max_entangled(d).projector();
  const double background = (1.0 - fidelity) / static_cast<double>(n - 1);
  ComplexMatrix rho = background * (ComplexMatrix::Identity(n, n) - psi) + fidelity * psi;
  return DensityMatrix({d, d}, std::move(rho));
}

ComplexMatrix antisymmetric_projector(int d) {
  require_family_dim(d);
  const int n = d * d;
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  const double h = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ComplexVector v = ComplexVector::Zero(n);
      v[index(i, j, d)] = h;
      v[index(j, i, d)] = -h;
      p += v * v.adjoint();
    }
  }
  return p;
}

DensityMatrix werner(int d, double weight) {
  require_family_dim(d);
  require_unit_interval(weight, "Werner weight W");
  const int n = d * d;
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix symmetric = ComplexMatrix::Zero(n, n);
  ComplexMatrix antisymmetric = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < d; ++k) {
    symmetric(index(k, k, d), index(k, k, d)) = 1.0;
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ComplexVector plus = ComplexVector::Zero(n);
      ComplexVector minus = ComplexVector::Zero(n);
      plus[index(i, j, d)] = h;
      plus[index(j, i, d)] = h;
      minus[index(i, j, d)] = h;
      minus[index(j, i, d)] = -h;
      symmetric += plus * plus.adjoint();
      antisymmetric += minus * minus.adjoint();
    }
  }
  const double dd = static_cast<double>(d);
  ComplexMatrix rho =
      (2.0 * (1.0 - weight) / (dd * (dd + 1.0))) * symmetric + (2.0 * weight / (dd * (dd - 1.0))) * antisymmetric;
  return DensityMatrix({d, d}, std::move(rho));
}

double isotropic_fidelity(const DensityMatrix& rho) {
  if (!rho.dims().square()) {
    throw DomainError("isotropic fidelity needs dimA == dimB");
  }
  const ComplexVector psi = max_entangled(rho.dims().a).amplitudes();
  return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

double werner_weight(const DensityMatrix& rho) {
  if (!rho.dims().square()) {
    throw DomainError("Werner weight needs dimA == dimB");
  }
  return (rho.matrix() * antisymmetric_projector(rho.dims().a)).trace().real();
}

PureState apply_local(const PureState& psi, const ComplexMatrix& ua, const ComplexMatrix& ub) {
  const Dims dims = psi.dims();
  if (ua.rows() != dims.a || ua.cols() != dims.a || ub.rows() != dims.b || ub.cols() != dims.b) {
    throw DomainError("local operators do not match the state's dimensions");
  }
  const ComplexMatrix c = ua * psi.coefficients() * ub.transpose();
  ComplexVector amps(dims.total());
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) {
      amps[index(i, j, dims.b)] = c(i, j);
    }
  }
  return PureState::normalized(dims, std::move(amps));
}

PureState random_pure(Dims dims, Rng& rng) {
  require_dims(dims);
  ComplexVector amps(dims.total());
  for (int k = 0; k < dims.total(); ++k) {
    amps[k] = rng.complex_normal();
  }
  return PureState::normalized(dims, std::move(amps));
}

PureState random_pure(Dims dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dims, rng);
}

DensityMatrix random_mixed(Dims dims, Rng& rng, int rank) {
  require_dims(dims);
  const int n = dims.total();
  if (rank < 0 || rank > n) {
    throw DomainError("random_mixed rank must lie in [0, dimA * dimB]");
  }
  const ComplexMatrix g = ginibre(n, rank == 0 ? n : rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(dims, std::move(rho));
}

}  // namespace alphaconc
