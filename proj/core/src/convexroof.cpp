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

#include "alphaconc/convexroof.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include <Eigen/Sparse>

#include "alphaconc/errors.hpp"
#include "alphaconc/random.hpp"

namespace alphaconc {

namespace {

// The search minimizes the ensemble average as a function of the matrix M
// whose rows are the unnormalized members, moving along M <- Q M for
// unitaries Q. A member with squared Schmidt weights lambda contributes
// p (sum_j lambda_j^alpha - 1), which has cusps wherever a Schmidt weight
// vanishes. A restart runs three phases:
//  1. descent on the smoothed cost p sum_j ((lambda_j + eps)^alpha -
//     eps^alpha) - p with eps shrinking geometrically;
//  2. pair moves: two members are mixed so that one lands exactly on a cusp;
//  3. descent on the exact cost restricted to the current cusp stratum (each
//     rank-deficient member keeps its deficiency), with Newton-chord
//     restoration after every step.
// Phases 2 and 3 alternate until a round gains less than value_tol.
// Even restarts start the continuation coarse, odd ones fine; the two
// schedules tend to settle in different basins.
constexpr double kCoarseSmoothing = 0.1;
constexpr double kFineSmoothing = 1e-3;
constexpr double kFinalSmoothing = 1e-12;
constexpr double kSmoothingFactor = 0.25;
constexpr int kStageIters = 100;
constexpr int kStratumIters = 300;
constexpr int kPairSweeps = 3;
constexpr double kArmijo = 1e-4;
constexpr double kStepGrowth = 3.0;
constexpr double kMinGradient = 1e-28;
constexpr double kMinPairGain = 1e-15;
constexpr int kSettleCount = 3;
// Relative Schmidt weight below which a member counts as rank deficient.
constexpr double kDeficientTol = 1e-6;
constexpr int kRestoreIters = 12;
constexpr double kRestoreTol = 1e-15;
constexpr double kGramShift = 1e-13;

// Rows of `m` live on C^a (x) C^b with a <= b.
struct Problem {
  Dims dims;
  double alpha;
};

ComplexMatrix coefficients_of(const ComplexMatrix& m, Eigen::Index row, Dims dims) {
  ComplexMatrix c(dims.a, dims.b);
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) {
      c(i, j) = m(row, i * dims.b + j);
    }
  }
  return c;
}

RealVector scaled_gram_spectrum(const ComplexMatrix& c, double p, ComplexMatrix* vectors) {
  const ComplexMatrix gram = c * c.adjoint() / p;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      gram, vectors != nullptr ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (vectors != nullptr) {
    *vectors = solver.eigenvectors();
  }
  return solver.eigenvalues();
}

double member_cost(const ComplexMatrix& c, double alpha, double eps) {
  const double p = c.squaredNorm();
  if (p <= 0.0) {
    return 0.0;
  }
  RealVector lam = scaled_gram_spectrum(c, p, nullptr);
  if (eps == 0.0) {
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return p * std::max(0.0, trace_power_of_spectrum(lam.cwiseMax(0.0), alpha) - 1.0);
  }
  double total = 0.0;
  for (double x : lam) {
    total += std::pow(std::max(x, 0.0) + eps, alpha) - std::pow(eps, alpha);
  }
  return p * (total - 1.0);
}

double objective(const ComplexMatrix& m, const Problem& pr, double eps) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    total += member_cost(coefficients_of(m, i, pr.dims), pr.alpha, eps);
  }
  return total;
}

// Riemannian gradient: the anti-Hermitian G with d/dt f(exp(-tG) M) = -||G||^2
// at t = 0. With eps = 0 the exact cost is differentiated along its stratum:
// Schmidt weights at or below `cut` (relative) are treated as frozen zeros.
ComplexMatrix gradient(const ComplexMatrix& m, const Problem& pr, double eps, double cut = 0.0) {
  const Eigen::Index rows = m.rows();
  ComplexMatrix w = ComplexMatrix::Zero(rows, rows);
  const ComplexMatrix mc = m.conjugate();
  for (Eigen::Index i = 0; i < rows; ++i) {
    const ComplexMatrix c = coefficients_of(m, i, pr.dims);
    const double p = c.squaredNorm();
    if (p <= 0.0) {
      continue;
    }
    ComplexMatrix u;
    const RealVector lam = scaled_gram_spectrum(c, p, &u).cwiseMax(0.0);
    const double floor = cut * lam.maxCoeff();
    RealVector dphi = RealVector::Zero(lam.size());
    double c0 = -1.0;
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
      if (eps == 0.0 && lam[k] <= floor) {
        continue;
      }
      dphi[k] = pr.alpha * std::pow(lam[k] + eps, pr.alpha - 1.0);
      c0 += std::pow(lam[k] + eps, pr.alpha) - std::pow(eps, pr.alpha) - dphi[k] * lam[k];
    }
    const ComplexMatrix hc = c0 * c + u * dphi.asDiagonal() * u.adjoint() * c;
    ComplexVector hv(m.cols());
    for (int a = 0; a < pr.dims.a; ++a) {
      for (int b = 0; b < pr.dims.b; ++b) {
        hv[a * pr.dims.b + b] = hc(a, b);
      }
    }
    w.row(i) = (mc * hv).transpose();
  }
  return (w - w.adjoint()) / 2.0;
}

// Cayley retraction (I + tG/2)^{-1} (I - tG/2) M, unitary for anti-Hermitian G.
ComplexMatrix retract(const ComplexMatrix& m, const ComplexMatrix& g, double t) {
  const ComplexMatrix id = ComplexMatrix::Identity(g.rows(), g.cols());
  const ComplexMatrix half = (t / 2.0) * g;
  return (id + half).partialPivLu().solve((id - half) * m);
}

// The same retraction along a fixed direction, diagonalized once: with
// G = -i V diag(theta) V^dagger the Cayley factor is V diag(z(t)) V^dagger.
class CayleyPath {
 public:
  CayleyPath(const ComplexMatrix& m, const ComplexMatrix& g) {
    const ComplexMatrix h = Complex(0.0, 1.0) * g;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0);
    theta_ = solver.eigenvalues();
    v_ = solver.eigenvectors();
    vm_ = v_.adjoint() * m;
  }

  ComplexMatrix at(double t) const {
    ComplexVector z(theta_.size());
    for (Eigen::Index k = 0; k < theta_.size(); ++k) {
      const Complex w(0.0, t * theta_[k] / 2.0);
      z[k] = (1.0 + w) / (1.0 - w);
    }
    return v_ * (z.asDiagonal() * vm_);
  }

 private:
  RealVector theta_;
  ComplexMatrix v_, vm_;
};

// Real coordinates of an anti-Hermitian m x m matrix, scaled so that the
// Euclidean norm equals the Frobenius norm: Im K_jj for each j, then
// sqrt(2) (Re K_jk, Im K_jk) for j < k in row-major order.
class AntiHermitianCoords {
 public:
  explicit AntiHermitianCoords(Eigen::Index m) : m_(m) {}

  Eigen::Index size() const { return m_ * m_; }

  Eigen::Index pair_index(Eigen::Index j, Eigen::Index k) const {
    return m_ + 2 * (j * m_ - j * (j + 1) / 2 + (k - j - 1));
  }

  RealVector to_coords(const ComplexMatrix& k) const {
    RealVector x(size());
    for (Eigen::Index j = 0; j < m_; ++j) {
      x[j] = k(j, j).imag();
      for (Eigen::Index l = j + 1; l < m_; ++l) {
        const Eigen::Index idx = pair_index(j, l);
        x[idx] = std::sqrt(2.0) * k(j, l).real();
        x[idx + 1] = std::sqrt(2.0) * k(j, l).imag();
      }
    }
    return x;
  }

  ComplexMatrix from_coords(const RealVector& x) const {
    ComplexMatrix k(m_, m_);
    for (Eigen::Index j = 0; j < m_; ++j) {
      k(j, j) = Complex(0.0, x[j]);
      for (Eigen::Index l = j + 1; l < m_; ++l) {
        const Eigen::Index idx = pair_index(j, l);
        const Complex z(x[idx] / std::sqrt(2.0), x[idx + 1] / std::sqrt(2.0));
        k(j, l) = z;
        k(l, j) = -std::conj(z);
      }
    }
    return k;
  }

 private:
  Eigen::Index m_;
};

// A member pinned to Schmidt rank a - deficiency.
struct Deficiency {
  Eigen::Index row;
  int deficiency;
};

// Linearized stratum constraints at m: for each pinned member i the block
// U_i^dagger (sum_j K_ij C_j) W_i must vanish, where U_i spans the left
// singular vectors of the vanishing singular values and W_i the right ones
// orthogonal to the retained singular vectors. Returns the Jacobian in
// AntiHermitianCoords and the current block values.
// Singular frames of a pinned member at the linearization point: retained
// left/right vectors (uk, vk) and the complementary ones (ud, wd).
struct PinFrame {
  Eigen::Index row;
  ComplexMatrix uk, ud, vk, wd;
};

void stratum_system(const ComplexMatrix& m, const Problem& pr, const std::vector<Deficiency>& pins,
                    Eigen::MatrixXd& jac, RealVector& residual, std::vector<PinFrame>* frames = nullptr) {
  const Eigen::Index rows = m.rows();
  const AntiHermitianCoords coords(rows);
  Eigen::Index n_cons = 0;
  for (const auto& pin : pins) {
    n_cons += 2 * pin.deficiency * (pr.dims.b - pr.dims.a + pin.deficiency);
  }
  jac = Eigen::MatrixXd::Zero(n_cons, coords.size());
  residual.resize(n_cons);
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(rows));
  for (Eigen::Index j = 0; j < rows; ++j) {
    coeffs.push_back(coefficients_of(m, j, pr.dims));
  }
  if (frames != nullptr) {
    frames->clear();
  }
  Eigen::Index r0 = 0;
  for (const auto& pin : pins) {
    const Eigen::Index i = pin.row;
    Eigen::JacobiSVD<ComplexMatrix> svd(coeffs[static_cast<std::size_t>(i)],
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
    const int keep = pr.dims.a - pin.deficiency;
    const ComplexMatrix u = svd.matrixU().rightCols(pin.deficiency);
    const ComplexMatrix w = svd.matrixV().rightCols(pr.dims.b - keep);
    if (frames != nullptr) {
      frames->push_back({i, svd.matrixU().leftCols(keep), u, svd.matrixV().leftCols(keep), w});
    }
    const Eigen::Index block = u.cols() * w.cols();
    auto put = [&](Eigen::Index col, const ComplexMatrix& b, Complex scale) {
      for (Eigen::Index e = 0; e < block; ++e) {
        const Complex z = scale * b(e % b.rows(), e / b.rows());
        jac(r0 + 2 * e, col) += z.real();
        jac(r0 + 2 * e + 1, col) += z.imag();
      }
    };
    for (Eigen::Index j = 0; j < rows; ++j) {
      const ComplexMatrix b = u.adjoint() * coeffs[static_cast<std::size_t>(j)] * w;
      if (j == i) {
        put(i, b, Complex(0.0, 1.0));
        for (Eigen::Index e = 0; e < block; ++e) {
          const Complex z = b(e % b.rows(), e / b.rows());
          residual[r0 + 2 * e] = z.real();
          residual[r0 + 2 * e + 1] = z.imag();
        }
      } else if (i < j) {
        const Eigen::Index idx = coords.pair_index(i, j);
        put(idx, b, Complex(1.0 / std::sqrt(2.0), 0.0));
        put(idx + 1, b, Complex(0.0, 1.0 / std::sqrt(2.0)));
      } else {
        const Eigen::Index idx = coords.pair_index(j, i);
        put(idx, b, Complex(-1.0 / std::sqrt(2.0), 0.0));
        put(idx + 1, b, Complex(0.0, 1.0 / std::sqrt(2.0)));
      }
    }
    r0 += 2 * block;
  }
}

// Members whose smallest relative Schmidt weights fall below kDeficientTol.
std::vector<Deficiency> find_deficient(const ComplexMatrix& m, const Problem& pr) {
  std::vector<Deficiency> pins;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const ComplexMatrix c = coefficients_of(m, i, pr.dims);
    const double p = c.squaredNorm();
    if (p <= 0.0) {
      continue;
    }
    const RealVector s = singular_values(c);
    int k = 0;
    for (Eigen::Index j = 0; j < s.size(); ++j) {
      k += (s[j] * s[j] / p < kDeficientTol) ? 1 : 0;
    }
    if (k > 0 && k < pr.dims.a) {
      pins.push_back({i, k});
    }
  }
  return pins;
}

// Stratum residual in frames fixed at the linearization point: for each
// pinned member the Schur complement C22 - C21 C11^{-1} C12 of its
// coefficient matrix written in those frames. It vanishes exactly when the
// member keeps its reduced rank, and its derivative at the linearization
// point is the block that stratum_system differentiates.
RealVector stratum_residual(const ComplexMatrix& m, const Problem& pr, const std::vector<PinFrame>& frames) {
  std::vector<Complex> values;
  for (const auto& f : frames) {
    const ComplexMatrix c = coefficients_of(m, f.row, pr.dims);
    const ComplexMatrix left = f.ud.adjoint() * c;
    ComplexMatrix block = left * f.wd;
    if (f.uk.cols() > 0) {
      const ComplexMatrix top = f.uk.adjoint() * c;
      block -= (left * f.vk) * (top * f.vk).partialPivLu().solve(top * f.wd);
    }
    for (Eigen::Index e = 0; e < block.size(); ++e) {
      values.push_back(block(e % block.rows(), e / block.rows()));
    }
  }
  RealVector r(2 * static_cast<Eigen::Index>(values.size()));
  for (std::size_t e = 0; e < values.size(); ++e) {
    r[2 * static_cast<Eigen::Index>(e)] = values[e].real();
    r[2 * static_cast<Eigen::Index>(e) + 1] = values[e].imag();
  }
  return r;
}

// Minimum-norm solutions of J x = r through the Gram matrix J J^T. Each
// constraint involves one row of the generator, so J is stored sparse. The
// small diagonal shift keeps redundant constraint rows solvable.
class Factor {
 public:
  explicit Factor(const Eigen::MatrixXd& jac) : jac_(jac.sparseView()) {
    Eigen::MatrixXd gram = jac_ * jac_.transpose();
    const double shift = kGramShift * std::max(gram.diagonal().maxCoeff(), 1.0);
    gram.diagonal().array() += shift;
    ldlt_.compute(gram);
  }

  RealVector solve(const RealVector& r) const { return jac_.transpose() * ldlt_.solve(r); }

  // Component of x tangent to the stratum.
  RealVector project(const RealVector& x) const { return x - solve(jac_ * x); }

 private:
  Eigen::SparseMatrix<double> jac_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

// Projection back onto the stratum by minimum-norm chord steps that reuse
// one Jacobian factorization; false if the residual does not settle.
bool restore_with(ComplexMatrix& m, const Problem& pr, const std::vector<PinFrame>& frames, const Factor& factor) {
  const AntiHermitianCoords coords(m.rows());
  for (int it = 0; it < kRestoreIters; ++it) {
    const RealVector residual = stratum_residual(m, pr, frames);
    if (residual.lpNorm<Eigen::Infinity>() <= kRestoreTol) {
      return true;
    }
    const RealVector x = factor.solve(-residual);
    m = retract(m, -coords.from_coords(x), 1.0);
  }
  return stratum_residual(m, pr, frames).lpNorm<Eigen::Infinity>() <= 1e3 * kRestoreTol;
}

bool restore(ComplexMatrix& m, const Problem& pr, const std::vector<Deficiency>& pins) {
  if (pins.empty()) {
    return true;
  }
  Eigen::MatrixXd jac;
  RealVector residual;
  std::vector<PinFrame> frames;
  stratum_system(m, pr, pins, jac, residual, &frames);
  return restore_with(m, pr, frames, Factor(jac));
}

class LocalSearch {
 public:
  LocalSearch(const Problem& pr, const RoofConfig& config, double smoothing)
      : pr_(pr), config_(config), smoothing_(smoothing) {}

  // Optimizes m in place; returns false if the iteration budget ran out.
  bool run(ComplexMatrix& m) {
    for (double eps = smoothing_; eps >= kFinalSmoothing; eps *= kSmoothingFactor) {
      if (!descend(m, eps)) {
        return false;
      }
    }
    double f = objective(m, pr_, 0.0);
    for (;;) {
      if (!pair_sweeps(m) || !stratum_descent(m)) {
        return false;
      }
      const double next = objective(m, pr_, 0.0);
      const bool settled = f - next < config_.value_tol;
      f = next;
      if (settled) {
        return true;
      }
    }
  }

  long iterations() const { return iterations_; }

 private:
  bool spend() { return ++iterations_ <= config_.max_iters; }

  bool descend(ComplexMatrix& m, double eps) {
    double f = objective(m, pr_, eps);
    double step = 1.0;
    int settled = 0;
    for (int it = 0; it < kStageIters; ++it) {
      if (!spend()) {
        return false;
      }
      const ComplexMatrix g = gradient(m, pr_, eps);
      const double gn = g.squaredNorm();
      if (gn < kMinGradient) {
        return true;
      }
      const CayleyPath path(m, g);
      for (;;) {
        ComplexMatrix trial = path.at(step);
        const double ft = objective(trial, pr_, eps);
        if (ft <= f - kArmijo * step * gn) {
          settled = (f - ft < config_.value_tol) ? settled + 1 : 0;
          m = std::move(trial);
          f = ft;
          break;
        }
        step /= 2.0;
        if (step < config_.step_tol) {
          return true;
        }
      }
      if (settled >= kSettleCount) {
        return true;
      }
      step *= kStepGrowth;
    }
    return true;
  }

  bool stratum_descent(ComplexMatrix& m) {
    const std::vector<Deficiency> pins = find_deficient(m, pr_);
    ComplexMatrix start = m;
    if (!restore(m, pr_, pins)) {
      m = std::move(start);
      return true;
    }
    const AntiHermitianCoords coords(m.rows());
    double f = objective(m, pr_, 0.0);
    double step = 1.0;
    int settled = 0;
    Eigen::MatrixXd jac;
    RealVector residual;
    std::vector<PinFrame> frames;
    for (int it = 0; it < kStratumIters; ++it) {
      if (!spend()) {
        return false;
      }
      RealVector g = coords.to_coords(gradient(m, pr_, 0.0, kDeficientTol));
      std::optional<Factor> factor;
      if (!pins.empty()) {
        stratum_system(m, pr_, pins, jac, residual, &frames);
        factor.emplace(jac);
        g = factor->project(g);
      }
      const double gn = g.squaredNorm();
      if (gn < kMinGradient) {
        return true;
      }
      const CayleyPath path(m, coords.from_coords(g));
      for (;;) {
        ComplexMatrix trial = path.at(step);
        if (!factor || restore_with(trial, pr_, frames, *factor)) {
          const double ft = objective(trial, pr_, 0.0);
          if (ft <= f - kArmijo * step * gn) {
            settled = (f - ft < config_.value_tol) ? settled + 1 : 0;
            m = std::move(trial);
            f = ft;
            break;
          }
        }
        step /= 2.0;
        if (step < config_.step_tol) {
          return true;
        }
      }
      if (settled >= kSettleCount) {
        return true;
      }
      step *= kStepGrowth;
    }
    return true;
  }

  // The 2x2 unitary mix sending row i to a multiple of (row i + t row j).
  static std::pair<ComplexVector, ComplexVector> pair_mix(const ComplexVector& vi,
                                                          const ComplexVector& vj, Complex t) {
    const double c = 1.0 / std::sqrt(1.0 + std::norm(t));
    const double s = std::abs(t) * c;
    const Complex e = std::abs(t) > 0.0 ? -t / std::abs(t) : Complex(1.0);
    return {c * vi - e * s * vj, std::conj(e) * s * vi + c * vj};
  }

  double pair_cost(const ComplexVector& x, const ComplexVector& y) const {
    return member_cost(coefficients_of(x.transpose(), 0, pr_.dims), pr_.alpha, 0.0) +
           member_cost(coefficients_of(y.transpose(), 0, pr_.dims), pr_.alpha, 0.0);
  }

  // Moves rows i and j to the best rank-lowering mix, if that helps.
  double pair_move(ComplexMatrix& m, Eigen::Index i, Eigen::Index j) const {
    const ComplexMatrix ci = coefficients_of(m, i, pr_.dims);
    const ComplexMatrix cj = coefficients_of(m, j, pr_.dims);
    Eigen::FullPivLU<ComplexMatrix> lu(cj);
    if (!lu.isInvertible()) {
      return 0.0;
    }
    // det(C_i + t C_j) = 0 for t in the spectrum of -C_j^{-1} C_i. The second
    // member hits a cusp at the same points under t -> -1/conj(t).
    const ComplexVector roots =
        Eigen::ComplexEigenSolver<ComplexMatrix>(-lu.solve(ci), false).eigenvalues();
    const ComplexVector vi = m.row(i).transpose();
    const ComplexVector vj = m.row(j).transpose();
    const double base = pair_cost(vi, vj);
    double best = base;
    Complex best_t(0.0);
    auto consider = [&](Complex t) {
      if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
        return;
      }
      auto [x, y] = pair_mix(vi, vj, t);
      const double cost = pair_cost(x, y);
      if (cost < best) {
        best = cost;
        best_t = t;
      }
    };
    for (const Complex& t : roots) {
      consider(t);
      if (std::abs(t) > 0.0) {
        consider(-1.0 / std::conj(t));
      }
    }
    if (best < base - kMinPairGain) {
      auto [x, y] = pair_mix(vi, vj, best_t);
      m.row(i) = x.transpose();
      m.row(j) = y.transpose();
      return base - best;
    }
    return 0.0;
  }

  bool pair_sweeps(ComplexMatrix& m) {
    if (!pr_.dims.square()) {
      return true;
    }
    for (int sweep = 0; sweep < kPairSweeps; ++sweep) {
      if (!spend()) {
        return false;
      }
      double gain = 0.0;
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.rows(); ++j) {
          if (i != j) {
            gain += pair_move(m, i, j);
          }
        }
      }
      if (gain < config_.value_tol) {
        break;
      }
    }
    return true;
  }

  Problem pr_;
  RoofConfig config_;
  double smoothing_;
  long iterations_ = 0;
};

// Column permutation exchanging the parties: |ij> <-> |ji>.
ComplexMatrix swap_parties(const ComplexMatrix& m, Dims dims) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) {
      out.col(j * dims.a + i) = m.col(i * dims.b + j);
    }
  }
  return out;
}

Ensemble ensemble_from_rows(const ComplexMatrix& m, Dims dims) {
  std::vector<EnsembleMember> members;
  double total = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double p = m.row(i).squaredNorm();
    if (p >= kMemberPruneTol) {
      total += p;
      members.push_back({p, PureState::normalized(dims, m.row(i).transpose())});
    }
  }
  for (auto& member : members) {
    member.probability /= total;
  }
  return Ensemble(std::move(members));
}

void check_reproduces(const Ensemble& ensemble, const DensityMatrix& rho) {
  const double err = (ensemble.mixture() - rho.matrix()).norm();
  if (!(err <= kMixtureTol)) {
    throw InvariantViolation("decomposition does not reproduce the state (Frobenius error " +
                             std::to_string(err) + ")");
  }
}

}  // namespace

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw InvariantViolation("ensemble has no members");
  }
  double total = 0.0;
  for (const auto& member : members_) {
    if (!(member.probability > 0.0)) {
      throw InvariantViolation("ensemble probabilities must be positive");
    }
    if (!(member.state.dims() == members_.front().state.dims())) {
      throw InvariantViolation("ensemble members have different dimensions");
    }
    total += member.probability;
  }
  if (!(std::abs(total - 1.0) <= 1e-10)) {
    throw InvariantViolation("ensemble probabilities do not sum to 1");
  }
}

ComplexMatrix Ensemble::mixture() const {
  const int n = dims().total();
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (const auto& member : members_) {
    const ComplexVector& v = member.state.amplitudes();
    rho.noalias() += member.probability * v * v.adjoint();
  }
  return rho;
}

double ensemble_average(const Ensemble& ensemble, AlphaParam alpha) {
  double total = 0.0;
  for (const auto& member : ensemble.members()) {
    total += member.probability * alpha_concurrence_pure(member.state, alpha);
  }
  return total;
}

int resolve_ensemble_size(const RoofConfig& config, int rank, Dims dims) {
  const long cap = static_cast<long>(dims.total()) * dims.total();
  if (config.restarts < 1) {
    throw ConfigError("restarts must be at least 1");
  }
  if (config.max_iters < 1) {
    throw ConfigError("max_iters must be at least 1");
  }
  if (!(config.step_tol > 0.0) || !(config.value_tol > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (config.ensemble_size == 0) {
    return std::min(rank * rank, rank + 4);
  }
  if (config.ensemble_size < rank) {
    throw ConfigError("ensemble_size " + std::to_string(config.ensemble_size) +
                      " is below the rank " + std::to_string(rank));
  }
  if (config.ensemble_size > cap) {
    throw ConfigError("ensemble_size " + std::to_string(config.ensemble_size) +
                      " exceeds (dimA*dimB)^2 = " + std::to_string(cap));
  }
  return config.ensemble_size;
}

HermitianSpectrum support_spectrum(const DensityMatrix& rho) {
  HermitianSpectrum full = hermitian_eig(rho.matrix(), Symmetrize::kYes);
  Eigen::Index rank = 0;
  while (rank < full.eigenvalues.size() && full.eigenvalues[rank] > kEigenCutoff) {
    ++rank;
  }
  return {full.eigenvalues.head(rank), full.eigenvectors.leftCols(rank)};
}

namespace {

ComplexMatrix rows_from_isometry(const HermitianSpectrum& support, const ComplexMatrix& v) {
  return v * support.eigenvalues.cwiseSqrt().asDiagonal() * support.eigenvectors.transpose();
}

}  // namespace

Ensemble decomposition_from_isometry(const DensityMatrix& rho, const ComplexMatrix& v) {
  const HermitianSpectrum support = support_spectrum(rho);
  const Eigen::Index rank = support.eigenvalues.size();
  if (v.cols() != rank) {
    throw NotIsometryError("isometry has " + std::to_string(v.cols()) +
                           " columns but the state has rank " + std::to_string(rank));
  }
  const double defect = (v.adjoint() * v - ComplexMatrix::Identity(rank, rank)).norm();
  if (!(defect <= kIsometryTol)) {
    throw NotIsometryError("columns are not orthonormal (defect " + std::to_string(defect) + ")");
  }
  Ensemble ensemble = ensemble_from_rows(rows_from_isometry(support, v), rho.dims());
  check_reproduces(ensemble, rho);
  return ensemble;
}

RoofResult roof_upper_bound(const DensityMatrix& rho, AlphaParam alpha, const RoofConfig& config) {
  const HermitianSpectrum support = support_spectrum(rho);
  const int rank = static_cast<int>(support.eigenvalues.size());
  const int size = resolve_ensemble_size(config, rank, rho.dims());

  // The cost depends only on the nonzero Schmidt weights, so the parties may
  // be exchanged to keep the reduced matrices on the smaller side.
  const bool swapped = rho.dims().a > rho.dims().b;
  const Problem pr{swapped ? Dims{rho.dims().b, rho.dims().a} : rho.dims(), alpha.value()};

  std::vector<double> values;
  std::optional<Ensemble> best;
  double best_value = std::numeric_limits<double>::infinity();
  bool converged = true;
  long iterations = 0;
  for (int r = 0; r < config.restarts; ++r) {
    Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(r));
    ComplexMatrix m = rows_from_isometry(support, haar_isometry(size, rank, rng));
    if (swapped) {
      m = swap_parties(m, rho.dims());
    }
    LocalSearch search(pr, config, r % 2 == 0 ? kCoarseSmoothing : kFineSmoothing);
    converged = search.run(m) && converged;
    iterations += search.iterations();
    if (swapped) {
      m = swap_parties(m, pr.dims);
    }
    Ensemble ensemble = ensemble_from_rows(m, rho.dims());
    const double value = ensemble_average(ensemble, alpha);
    values.push_back(value);
    if (value < best_value) {
      best_value = value;
      best = std::move(ensemble);
    }
  }
  check_reproduces(*best, rho);
  return {best_value, std::move(*best), converged, iterations, std::move(values)};
}

}  // namespace alphaconc
