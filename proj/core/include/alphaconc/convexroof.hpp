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

// Upper bounds on the mixed-state alpha-concurrence by searching over
// pure-state decompositions rho = sum_i p_i |psi_i><psi_i|.
//
// Every decomposition with m members has the form
//   |psi~_i> = sum_k V_ik sqrt(mu_k) |e_k>
// for an m x rank isometry V and the eigenpairs (mu_k, e_k) of rho, so the
// search runs over isometries. The value reported by roof_upper_bound is the
// ensemble average of the best decomposition found: an upper bound on the
// convex roof, not the roof itself.

#include <cstdint>
#include <vector>

#include "alphaconc/measures.hpp"
#include "alphaconc/states.hpp"

namespace alphaconc {

/// Members lighter than this are dropped from decompositions.
inline constexpr double kMemberPruneTol = 1e-12;
/// Eigenvalues of rho at or below this are treated as zero.
inline constexpr double kEigenCutoff = 1e-10;
/// Frobenius tolerance for a mixture to count as reproducing its target.
inline constexpr double kMixtureTol = 1e-8;
inline constexpr double kIsometryTol = 1e-9;

struct EnsembleMember {
  double probability;
  PureState state;
};

class Ensemble {
 public:
  /// Throws InvariantViolation unless all probabilities are positive, the
  /// members share dimensions and the probabilities sum to 1 within 1e-10.
  explicit Ensemble(std::vector<EnsembleMember> members);

  const std::vector<EnsembleMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Dims& dims() const { return members_.front().state.dims(); }

  /// sum_i p_i |psi_i><psi_i|.
  ComplexMatrix mixture() const;

 private:
  std::vector<EnsembleMember> members_;
};

/// sum_i p_i C_alpha(psi_i).
double ensemble_average(const Ensemble& ensemble, AlphaParam alpha);

struct RoofConfig {
  /// Number of members per decomposition; 0 selects min(r^2, r + 4) for a
  /// state of rank r.
  int ensemble_size = 0;
  int restarts = 8;
  /// Iteration budget per restart, counting descent steps and pair sweeps.
  int max_iters = 20000;
  /// Smallest step the line search tries before giving up.
  double step_tol = 1e-14;
  /// Convergence: three consecutive value changes below this.
  double value_tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Members per decomposition that `config` selects for a state of rank
/// `rank` on `dims`. Throws ConfigError on an invalid configuration.
int resolve_ensemble_size(const RoofConfig& config, int rank, Dims dims);

/// Numerically nonzero eigenpairs of rho (eigenvalues above kEigenCutoff),
/// eigenvalues nonincreasing.
HermitianSpectrum support_spectrum(const DensityMatrix& rho);

/// Decomposition generated by the m x rank isometry V (rank = number of
/// eigenvalues above kEigenCutoff). Throws NotIsometryError unless
/// V^dagger V = I within kIsometryTol.
Ensemble decomposition_from_isometry(const DensityMatrix& rho, const ComplexMatrix& v);

struct RoofResult {
  double value;
  Ensemble best;
  /// False when some restart exhausted max_iters before settling.
  bool converged;
  /// Iterations summed over restarts.
  long iterations;
  /// Final value of each restart, in restart order.
  std::vector<double> restart_values;
};

/// Minimum over `config.restarts` locally optimized decompositions, each
/// started from a Haar-random isometry drawn from Rng::stream(seed, index).
/// Deterministic given the configuration. Throws ConfigError on an invalid
/// configuration.
RoofResult roof_upper_bound(const DensityMatrix& rho, AlphaParam alpha,
                            const RoofConfig& config = {});

}  // namespace alphaconc
