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

#include <benchmark/benchmark.h>

#include "alphaconc/convexroof.hpp"
#include "alphaconc/etaopt.hpp"
#include "alphaconc/measures.hpp"

namespace alphaconc {
namespace {

void BM_LowerBoundIsotropic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = isotropic(d, 0.8);
  const AlphaParam alpha(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_bound_alpha(rho, alpha).lower_bound);
  }
}
BENCHMARK(BM_LowerBoundIsotropic)->DenseRange(2, 6);

void BM_PureAlphaConcurrence(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const PureState psi = random_pure({d, d}, 7);
  const AlphaParam alpha(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_concurrence_pure(psi, alpha));
  }
}
BENCHMARK(BM_PureAlphaConcurrence)->RangeMultiplier(2)->Range(2, 16);

void BM_EtaBruteforce(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const AlphaParam alpha(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta_isotropic_bruteforce(d, 0.9, alpha).value);
  }
}
BENCHMARK(BM_EtaBruteforce)->RangeMultiplier(4)->Range(4, 256);

void BM_RoofTwoQubit(benchmark::State& state) {
  Rng rng(11);
  const DensityMatrix rho = random_mixed({2, 2}, rng);
  RoofConfig config;
  config.restarts = 1;
  const AlphaParam alpha(0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(roof_upper_bound(rho, alpha, config).value);
  }
}
BENCHMARK(BM_RoofTwoQubit)->Unit(benchmark::kMillisecond);

void BM_RoofQutritIsotropic(benchmark::State& state) {
  const DensityMatrix rho = isotropic(3, 0.7);
  RoofConfig config;
  config.restarts = 1;
  const AlphaParam alpha(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(roof_upper_bound(rho, alpha, config).value);
  }
}
BENCHMARK(BM_RoofQutritIsotropic)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
}  // namespace alphaconc

BENCHMARK_MAIN();
