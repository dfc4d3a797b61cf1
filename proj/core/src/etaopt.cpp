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

#include "alphaconc/etaopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphaconc/errors.hpp"

namespace alphaconc {
namespace {

constexpr double kMajorizationTol = 1e-12;

void require_entangled_isotropic(int d, double fidelity) {
  if (d < 2) {
    throw DomainError("eta search needs d >= 2");
  }
  if (!(fidelity * d > 1.0 && fidelity <= 1.0)) {
    throw DomainError("eta search needs 1/d < F <= 1");
  }
}

}  // namespace

std::optional<GammaDelta> gamma_delta(int n, int m, double fidelity, int d) {
  if (n < 1 || m < 0) {
    throw DomainError("gamma_delta needs n >= 1 and m >= 0");
  }
  require_entangled_isotropic(d, fidelity);
  const double fd = fidelity * d;
  const double nn = n;
  const double mm = m;
  if (m == 0) {
    if (std::abs(nn - fd) > kIntegerVertexTol) {
      return std::nullopt;
    }
    return GammaDelta{1.0 / std::sqrt(nn), 0.0};
  }
  const double slack = nn + mm - fd;
  if (slack < -kIntegerVertexTol || fd < nn - kIntegerVertexTol) {
    return std::nullopt;
  }
  const double root = std::sqrt(std::max(0.0, nn * mm * slack));
  const double sqrt_fd = std::sqrt(fd);
  GammaDelta out;
  out.gamma = (nn * sqrt_fd + root) / (nn * (nn + mm));
  out.delta = std::max(0.0, (mm * sqrt_fd - root) / (mm * (nn + mm)));
  return out;
}

std::optional<EtaCandidate> eta_candidate(int n, int m, double fidelity, int d, AlphaParam alpha) {
  const auto gd = gamma_delta(n, m, fidelity, d);
  if (!gd) {
    return std::nullopt;
  }
  const double a2 = 2.0 * alpha.value();
  EtaCandidate c;
  c.n = n;
  c.m = m;
  c.gamma = gd->gamma;
  c.delta = gd->delta;
  // Zero-valued delta entries are absent from the Schmidt vector.
  const double delta_term = c.delta > 0.0 ? m * std::pow(c.delta, a2) : 0.0;
  c.value = n * std::pow(c.gamma, a2) + delta_term - 1.0;
  return c;
}

EtaSearch eta_isotropic_bruteforce(int d, double fidelity, AlphaParam alpha) {
  require_entangled_isotropic(d, fidelity);
  EtaSearch search;
  search.value = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= d; ++n) {
    for (int m = 0; n + m <= d; ++m) {
      const auto c = eta_candidate(n, m, fidelity, d, alpha);
      if (!c) {
        continue;
      }
      search.feasible.push_back(*c);
      if (c->value < search.value) {
        search.value = c->value;
        search.best = *c;
      }
    }
  }
  search.vertex_value = eta_isotropic_closed(d, fidelity, alpha);
  return search;
}

double eta_isotropic_closed(int d, double fidelity, AlphaParam alpha) {
  if (d < 2 || !(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw DomainError("eta_isotropic_closed needs d >= 2 and F in [0, 1]");
  }
  const double fd = fidelity * d;
  return fd <= 1.0 ? 0.0 : std::pow(fd, 1.0 - alpha.value()) - 1.0;
}

double eta_werner_closed(double weight, AlphaParam alpha) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw DomainError("eta_werner_closed needs W in [0, 1]");
  }
  return weight <= 0.5 ? 0.0 : std::pow(2.0 * weight, 1.0 - alpha.value()) - 1.0;
}

EtaSearch eta_werner_bruteforce(double weight, AlphaParam alpha) {
  if (!(weight > 0.5 && weight <= 1.0)) {
    throw DomainError("eta_werner_bruteforce needs 1/2 < W <= 1");
  }
  EtaSearch search = eta_isotropic_bruteforce(2, weight, alpha);
  search.vertex_value = eta_werner_closed(weight, alpha);
  return search;
}

double werner_overlap_bound(const SchmidtVector& lambdas) {
  double root_sum = 0.0;
  for (double x : lambdas.lambdas()) {
    root_sum += std::sqrt(x);
  }
  return 0.5 * root_sum * root_sum;
}

SchmidtVector werner_rank2_schmidt(double weight) {
  if (!(weight >= 0.5 && weight <= 1.0)) {
    throw DomainError("werner_rank2_schmidt needs 1/2 <= W <= 1");
  }
  // (sqrt l1 + sqrt l2)^2 = 1 + 2 sqrt(l1 l2) = 2W fixes the product l1 l2.
  const double product = 0.25 * (2.0 * weight - 1.0) * (2.0 * weight - 1.0);
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * product));
  const double l1 = 0.5 * (1.0 + disc);
  return SchmidtVector({l1, 1.0 - l1});
}

bool majorization_check(const SchmidtVector& x, const SchmidtVector& y) {
  const auto xs = x.lambdas();
  const auto ys = y.lambdas();
  const std::size_t len = std::max(xs.size(), ys.size());
  double px = 0.0;
  double py = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    px += k < xs.size() ? xs[k] : 0.0;
    py += k < ys.size() ? ys[k] : 0.0;
    if (px > py + kMajorizationTol) {
      return false;
    }
  }
  return std::abs(px - py) <= kMajorizationTol;
}

}  // namespace alphaconc
