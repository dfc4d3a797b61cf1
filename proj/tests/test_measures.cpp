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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "alphaconc/errors.hpp"
#include "alphaconc/etaopt.hpp"
#include "alphaconc/measures.hpp"
#include "test_support.hpp"

namespace alphaconc {
namespace {

using testing::product_state;
using testing::two_qubit_state;

const double kSqrt2m1 = std::sqrt(2.0) - 1.0;

TEST(AlphaParam, RangeIsChecked) {
  EXPECT_NO_THROW(AlphaParam(0.0));
  EXPECT_NO_THROW(AlphaParam(0.5));
  EXPECT_THROW(AlphaParam(-0.01), DomainError);
  EXPECT_THROW(AlphaParam(0.51), DomainError);
  EXPECT_THROW(AlphaParam(std::nan("")), DomainError);
}

TEST(AlphaConcurrenceSchmidt, Examples) {
  EXPECT_EQ(alpha_concurrence_schmidt(SchmidtVector({1.0}), AlphaParam(0.3)), 0.0);
  EXPECT_NEAR(alpha_concurrence_schmidt(SchmidtVector({0.5, 0.5}), AlphaParam(0.5)), kSqrt2m1, 1e-15);
  EXPECT_NEAR(alpha_concurrence_schmidt(SchmidtVector({0.5, 0.3, 0.2}), AlphaParam(0.5)), 0.70204293419167158,
              1e-14);
}

TEST(AlphaConcurrencePure, Examples) {
  EXPECT_NEAR(alpha_concurrence_pure(product_state(2, 0, 2, 1), AlphaParam(0.3)), 0.0, 1e-15);
  EXPECT_NEAR(alpha_concurrence_pure(max_entangled(3), AlphaParam(0.0)), 2.0, 1e-14);
  EXPECT_NEAR(alpha_concurrence_pure(two_qubit_state(0.7, 0.3), AlphaParam(0.5)), 0.38438258403924162, 1e-14);
}

TEST(AlphaConcurrencePure, AgreesWithSchmidtRoute) {
  Rng rng(101);
  for (int k = 0; k < 50; ++k) {
    const auto psi = random_pure({3, 4}, rng);
    const AlphaParam a(0.5 * rng.uniform());
    EXPECT_NEAR(alpha_concurrence_pure(psi, a), alpha_concurrence_schmidt(schmidt(psi), a), 1e-12);
  }
}

TEST(QConcurrence, Examples) {
  EXPECT_NEAR(q_concurrence_pure(product_state(2, 0, 2, 0), 2.0), 0.0, 1e-15);
  EXPECT_NEAR(q_concurrence_pure(max_entangled(2), 2.0), 0.5, 1e-15);
  EXPECT_NEAR(q_concurrence_pure(max_entangled(4), 60.0), 1.0, 1e-12);
  EXPECT_THROW(q_concurrence_pure(max_entangled(2), 1.5), DomainError);
}

TEST(ConcurrencePure, Examples) {
  EXPECT_NEAR(concurrence_pure(product_state(3, 1, 3, 2)), 0.0, 1e-15);
  EXPECT_NEAR(concurrence_pure(max_entangled(2)), 1.0, 1e-15);
  EXPECT_NEAR(concurrence_pure(max_entangled(3)), 1.1547005383792515, 1e-14);
  EXPECT_NEAR(concurrence_pure(max_entangled(4)), 1.224744871391589, 1e-14);
}

TEST(LowerBound, MaximallyMixedIsZero) {
  const auto r = lower_bound_alpha(isotropic(2, 0.25), AlphaParam(0.5));
  EXPECT_EQ(r.lower_bound, 0.0);
  EXPECT_LE(r.ppt_norm, 1.0 + 1e-12);
  EXPECT_LE(r.realign_norm, 1.0 + 1e-12);
}

TEST(LowerBound, IsotropicMatchesClosedForm) {
  const auto r = lower_bound_alpha(isotropic(3, 0.8), AlphaParam(0.5));
  EXPECT_NEAR(r.ppt_norm, 2.4, 1e-12);
  EXPECT_NEAR(r.realign_norm, 2.4, 1e-12);
  EXPECT_EQ(r.branch, BoundBranch::kBoth);
  EXPECT_NEAR(r.lower_bound, 0.51243556529821411, 1e-12);
}

TEST(LowerBound, WernerQutritAtAlphaZero) {
  EXPECT_NEAR(lower_bound_alpha(werner(3, 1.0), AlphaParam(0.0)).lower_bound, 0.6666666666666667, 1e-12);
}

TEST(LowerBound, SeparableBoundaries) {
  EXPECT_NEAR(lower_bound_alpha(isotropic(3, 1.0 / 3.0), AlphaParam(0.2)).lower_bound, 0.0, 1e-12);
  EXPECT_NEAR(lower_bound_alpha(werner(2, 0.5), AlphaParam(0.2)).lower_bound, 0.0, 1e-12);
}

TEST(LowerBound, RejectsRectangularStates) {
  Rng rng(7);
  EXPECT_THROW(lower_bound_alpha(random_mixed({2, 3}, rng), AlphaParam(0.5)), DomainError);
}

TEST(LowerBound, NeverExceedsPureStateValue) {
  Rng rng(211);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + k % 3;
    const auto psi = random_pure({d, d}, rng);
    const AlphaParam a(0.5 * rng.uniform());
    const double lb = lower_bound_alpha(DensityMatrix::from_pure(psi), a).lower_bound;
    EXPECT_LE(lb, alpha_concurrence_pure(psi, a) + 1e-10);
  }
}

TEST(IsotropicAlpha, Examples) {
  EXPECT_EQ(isotropic_alpha(3, 1.0 / 3.0, AlphaParam(0.2)), 0.0);
  EXPECT_NEAR(isotropic_alpha(2, 1.0, AlphaParam(0.0)), 1.0, 1e-15);
  EXPECT_NEAR(isotropic_alpha(3, 0.8, AlphaParam(0.5)), 0.51243556529821411, 1e-14);
  EXPECT_NEAR(isotropic_alpha(2, 0.9, AlphaParam(0.5)), 0.33137084989847604, 1e-14);
  EXPECT_THROW(isotropic_alpha(1, 0.5, AlphaParam(0.2)), DomainError);
  EXPECT_THROW(isotropic_alpha(2, 1.2, AlphaParam(0.2)), DomainError);
}

TEST(WernerAlpha, Examples) {
  EXPECT_EQ(werner_alpha(0.5, AlphaParam(0.1)), 0.0);
  EXPECT_NEAR(werner_alpha(1.0, AlphaParam(0.0)), 1.0, 1e-15);
  EXPECT_NEAR(werner_alpha(0.75, AlphaParam(0.5)), 0.20710678118654752, 1e-15);
  EXPECT_THROW(werner_alpha(-0.1, AlphaParam(0.1)), DomainError);
}

TEST(ComparisonMeasures, Examples) {
  EXPECT_NEAR(werner_concurrence(1.0), 1.0, 1e-15);
  EXPECT_NEAR(werner_eof(1.0), 1.0, 1e-15);
  EXPECT_EQ(werner_eof(0.5), 0.0);
  EXPECT_EQ(werner_eof(0.0), 0.0);
  EXPECT_NEAR(werner_eof(0.75), 0.35457890266526988, 1e-14);
  EXPECT_NEAR(werner_eof(0.6), 0.081468915014354213, 1e-14);
  EXPECT_NEAR(isotropic_concurrence(2, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(isotropic_concurrence(2, 1.0), isotropic_alpha(2, 1.0, AlphaParam(0.0)), 1e-15);
  EXPECT_NEAR(binary_entropy(0.1), 0.46899559358928122, 1e-15);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
}

TEST(ComparisonMeasures, HalfConcurrenceOvertakesEofAtKnownWeight) {
  const double w = 0.60258181624713815;
  EXPECT_NEAR(werner_eof(w), werner_alpha(w, AlphaParam(0.5)), 1e-12);
  EXPECT_LT(werner_eof(w - 0.01), werner_alpha(w - 0.01, AlphaParam(0.5)));
  EXPECT_GT(werner_eof(w + 0.01), werner_alpha(w + 0.01, AlphaParam(0.5)));
}

TEST(GRatio, Examples) {
  EXPECT_NEAR(g_ratio(SchmidtVector({0.5, 0.5}), AlphaParam(0.37)), 1.0, 1e-14);
  EXPECT_NEAR(g_ratio(SchmidtVector({0.9, 0.1}), AlphaParam(0.0)), 1.0, 1e-15);
  const double g1 = g_ratio(SchmidtVector({0.9, 0.1}), AlphaParam(0.1));
  const double g3 = g_ratio(SchmidtVector({0.9, 0.1}), AlphaParam(0.3));
  const double g5 = g_ratio(SchmidtVector({0.9, 0.1}), AlphaParam(0.5));
  EXPECT_NEAR(g1, 0.90506671344909474, 1e-14);
  EXPECT_NEAR(g3, 0.75271383071828989, 1e-14);
  EXPECT_NEAR(g5, 0.63955188369408844, 1e-14);
  EXPECT_GT(g1, g3);
  EXPECT_GT(g3, g5);
  EXPECT_THROW(g_ratio(SchmidtVector({1.0}), AlphaParam(0.2)), DomainError);
}

TEST(GRatio, NonincreasingInAlpha) {
  Rng rng(307);
  for (int k = 0; k < 200; ++k) {
    const SchmidtVector s(testing::random_simplex(2 + k % 4, rng));
    double previous = 1.0 + 1e-12;
    for (int j = 0; j <= 10; ++j) {
      const double g = g_ratio(s, AlphaParam(0.05 * j));
      EXPECT_LE(g, previous + 1e-12);
      previous = g;
    }
  }
}

TEST(Crossover, MatchesKnownThreshold) {
  EXPECT_NEAR(half_concurrence_crossover(), 5.150770243157541, 1e-6);
  EXPECT_NEAR(half_concurrence_crossover(1e-12), 5.150770243157541, 1e-11);
  EXPECT_THROW(half_concurrence_crossover(0.0), DomainError);
}

// Concavity of Tr rho^alpha - 1.
TEST(Properties, TracePowerIsConcave) {
  Rng rng(401);
  for (int k = 0; k < 300; ++k) {
    const Dims dims{1, 2 + k % 5};
    const auto rho = random_mixed(dims, rng).matrix();
    const auto sigma = random_mixed(dims, rng, 1 + k % dims.total()).matrix();
    const double t = rng.uniform();
    const double a = 0.5 * rng.uniform();
    const double lhs = trace_power(t * rho + (1.0 - t) * sigma, a) - 1.0;
    const double rhs = t * (trace_power(rho, a) - 1.0) + (1.0 - t) * (trace_power(sigma, a) - 1.0);
    EXPECT_GE(lhs, rhs - 1e-9);
  }
}

// Majorized Schmidt vectors carry at least as much C_alpha.
TEST(Properties, SchurConcavity) {
  Rng rng(409);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + k % 4;
    const auto y = testing::random_simplex(n, rng);
    // A doubly stochastic mix of y is majorized by y.
    const ComplexMatrix u = haar_unitary(n, rng);
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        x[static_cast<std::size_t>(i)] += std::norm(u(i, j)) * y[static_cast<std::size_t>(j)];
      }
    }
    const SchmidtVector sx(x);
    const SchmidtVector sy(y);
    ASSERT_TRUE(majorization_check(sx, sy));
    const AlphaParam a(0.5 * rng.uniform());
    EXPECT_GE(alpha_concurrence_schmidt(sx, a), alpha_concurrence_schmidt(sy, a) - 1e-12);
  }
}

TEST(Properties, PureStateRange) {
  Rng rng(419);
  for (int k = 0; k < 300; ++k) {
    const int d = 2 + k % 4;
    const auto psi = random_pure({d, d + k % 2}, rng);
    const double a = 0.5 * rng.uniform();
    const double c = alpha_concurrence_pure(psi, AlphaParam(a));
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, std::pow(d, 1.0 - a) - 1.0 + 1e-12);
  }
}

// Average C_alpha after a local measurement on A never exceeds the input.
TEST(Properties, LocalMeasurementMonotonicity) {
  Rng rng(421);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + k % 3;
    const auto psi = random_pure({d, d}, rng);
    const AlphaParam a(0.5 * rng.uniform());
    const int outcomes = 2 + k % 2;
    const ComplexMatrix v = haar_isometry(outcomes * d, d, rng);
    double average = 0.0;
    for (int o = 0; o < outcomes; ++o) {
      const ComplexMatrix kraus = v.middleRows(o * d, d);
      const ComplexMatrix c = kraus * psi.coefficients();
      ComplexVector out(d * d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          out[i * d + j] = c(i, j);
        }
      }
      const double p = out.squaredNorm();
      if (p < 1e-14) {
        continue;
      }
      average += p * alpha_concurrence_pure(PureState::normalized({d, d}, out), a);
    }
    EXPECT_LE(average, alpha_concurrence_pure(psi, a) + 1e-10);
  }
}

TEST(Properties, PureStateNormIdentity) {
  Rng rng(431);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + k % 3;
    const auto psi = random_pure({d, d}, rng);
    const auto rho = DensityMatrix::from_pure(psi);
    const SchmidtVector lambdas = schmidt(psi);
    double root_sum = 0.0;
    for (double x : lambdas.lambdas()) {
      root_sum += std::sqrt(x);
    }
    EXPECT_NEAR(trace_norm(partial_transpose(rho)), root_sum * root_sum, 1e-10);
    EXPECT_NEAR(trace_norm(realign(rho)), root_sum * root_sum, 1e-10);
  }
}

}  // namespace
}  // namespace alphaconc
