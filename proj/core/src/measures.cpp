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

#include "alphaconc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "alphaconc/errors.hpp"

namespace alphaconc {
namespace {

void require_family_dim(int d) {
  if (d < 2) {
    throw DomainError("closed forms need d >= 2");
  }
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1]");
  }
}

// (d^(1-alpha) - 1)/(d - 1), the slope shared by the bound and the
// isotropic closed form.
double bound_prefactor(double d, double alpha) { return (std::pow(d, 1.0 - alpha) - 1.0) / (d - 1.0); }

}  // namespace

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    throw DomainError("alpha must lie in [0, 1/2], got " + std::to_string(alpha));
  }
}

const char* to_string(BoundBranch branch) {
  switch (branch) {
    case BoundBranch::kPpt:
      return "ppt";
    case BoundBranch::kRealignment:
      return "realignment";
    case BoundBranch::kBoth:
      return "both";
  }
  return "both";
}

double alpha_concurrence_schmidt(const SchmidtVector& lambdas, AlphaParam alpha) {
  double total = 0.0;
  for (double x : lambdas.lambdas()) {
    total += std::pow(x, alpha.value());
  }
  return std::max(0.0, total - 1.0);
}

double alpha_concurrence_pure(const PureState& psi, AlphaParam alpha) {
  const ComplexMatrix rho_a = partial_trace_b(psi.projector(), psi.dims());
  return std::max(0.0, trace_power(rho_a, alpha.value(), std::nullopt) - 1.0);
}

double q_concurrence_pure(const PureState& psi, double q) {
  if (!(q >= 2.0)) {
    throw DomainError("q-concurrence needs q >= 2");
  }
  const SchmidtVector lambdas = schmidt(psi);
  double total = 0.0;
  for (double x : lambdas.lambdas()) {
    total += std::pow(x, q);
  }
  return std::max(0.0, 1.0 - total);
}

double concurrence_pure(const PureState& psi) {
  const SchmidtVector lambdas = schmidt(psi);
  double purity = 0.0;
  for (double x : lambdas.lambdas()) {
    purity += x * x;
  }
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

BoundReport lower_bound_alpha(const DensityMatrix& rho, AlphaParam alpha) {
  const Dims dims = rho.dims();
  if (!dims.square() || dims.a < 2) {
    throw DomainError("the PPT/realignment bound needs dimA == dimB >= 2");
  }
  BoundReport report;
  report.ppt_norm = trace_norm(partial_transpose(rho));
  report.realign_norm = trace_norm(realign(rho));
  const double best = std::max(report.ppt_norm, report.realign_norm);
  if (std::abs(report.ppt_norm - report.realign_norm) <= kBranchTieTol * best) {
    report.branch = BoundBranch::kBoth;
  } else {
    report.branch = report.ppt_norm > report.realign_norm ? BoundBranch::kPpt : BoundBranch::kRealignment;
  }
  report.lower_bound = bound_prefactor(dims.a, alpha.value()) * std::max(0.0, best - 1.0);
  return report;
}

double isotropic_alpha(int d, double fidelity, AlphaParam alpha) {
  require_family_dim(d);
  require_unit_interval(fidelity, "F");
  const double dd = d;
  if (fidelity * dd <= 1.0) {
    return 0.0;
  }
  return bound_prefactor(dd, alpha.value()) * (dd * fidelity - 1.0);
}

double werner_alpha(double weight, AlphaParam alpha) {
  require_unit_interval(weight, "W");
  if (weight <= 0.5) {
    return 0.0;
  }
  return (std::pow(2.0, 1.0 - alpha.value()) - 1.0) * (2.0 * weight - 1.0);
}

double isotropic_concurrence(int d, double fidelity) {
  require_family_dim(d);
  require_unit_interval(fidelity, "F");
  const double dd = d;
  if (fidelity * dd <= 1.0) {
    return 0.0;
  }
  return std::sqrt(2.0 / (dd * (dd - 1.0))) * (dd * fidelity - 1.0);
}

double werner_concurrence(double weight) {
  require_unit_interval(weight, "W");
  return weight <= 0.5 ? 0.0 : 2.0 * weight - 1.0;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("binary entropy needs x in [0, 1]");
  }
  if (x == 0.0 || x == 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double werner_eof(double weight) {
  require_unit_interval(weight, "W");
  if (weight <= 0.5) {
    return 0.0;
  }
  const double arg = 0.5 * (1.0 - 2.0 * std::sqrt(weight * (1.0 - weight)));
  return binary_entropy(std::clamp(arg, 0.0, 1.0));
}

double g_ratio(const SchmidtVector& lambdas, AlphaParam alpha) {
  const int r = lambdas.rank();
  if (r < 2) {
    throw DomainError("g_ratio needs Schmidt rank > 1");
  }
  double total = 0.0;
  for (double x : lambdas.lambdas()) {
    total += std::pow(x, alpha.value());
  }
  return (total - 1.0) / (std::pow(static_cast<double>(r), 1.0 - alpha.value()) - 1.0);
}

double half_concurrence_crossover(double tolerance) {
  if (!(tolerance > 0.0)) {
    throw DomainError("crossover tolerance must be positive");
  }
  const auto gap = [](double d) { return (std::sqrt(d) - 1.0) / (d - 1.0) - std::sqrt(2.0 / (d * (d - 1.0))); };
  const auto done = [tolerance](double lo, double hi) { return hi - lo <= tolerance; };
  // The gap is negative just above d = 2 and positive at d = 20.
  const auto [lo, hi] = boost::math::tools::bisect(gap, 2.0 + 1e-9, 20.0, done);
  return 0.5 * (lo + hi);
}

}  // namespace alphaconc
