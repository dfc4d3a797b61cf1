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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "alphaconc/convexroof.hpp"
#include "alphaconc/etaopt.hpp"
#include "alphaconc/measures.hpp"
#include "alphaconc_cli/cli.hpp"
#include "test_support.hpp"

namespace alphaconc {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Running worst-case tracker for a tolerance check.
class Tally {
 public:
  void check(bool ok, double excess, const std::string& where) {
    ++count_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) {
        first_failure_ = where;
      }
    }
    worst_ = std::max(worst_, excess);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks, " << failures_ << " failed, worst " << worst_;
    if (!first_failure_.empty()) {
      s << ", first failure " << first_failure_;
    }
    return s.str();
  }

 private:
  long count_ = 0;
  long failures_ = 0;
  double worst_ = 0.0;
  std::string first_failure_;
};

const std::vector<double> kAlphas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5};

// 21 points in (1/d, 1].
double fidelity_grid(int d, int k) { return 1.0 / d + k * (1.0 - 1.0 / d) / 21.0; }

template <typename... Args>
std::string at(const char* fmt, Args... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Verdict isotropic_exactness() {
  Tally t;
  for (int d = 2; d <= 6; ++d) {
    for (int k = 1; k <= 21; ++k) {
      const double f = fidelity_grid(d, k);
      const DensityMatrix rho = isotropic(d, f);
      for (double a : kAlphas) {
        const double err = std::abs(lower_bound_alpha(rho, AlphaParam(a)).lower_bound -
                                    isotropic_alpha(d, f, AlphaParam(a)));
        t.check(err <= 1e-8, err, at("d=%d F=%g alpha=%g", d, f, a));
      }
    }
  }
  return {t.ok(), t.summary()};
}

Verdict norm_identity() {
  Tally t;
  Rng rng(20260101);
  for (int k = 0; k < 500; ++k) {
    const Dims dims{1 + static_cast<int>(rng.uniform() * 4), 1 + static_cast<int>(rng.uniform() * 4)};
    const PureState psi = random_pure(dims, rng);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const SchmidtVector lambdas = schmidt(psi);
    double root_sum = 0.0;
    for (double x : lambdas.lambdas()) {
      root_sum += std::sqrt(x);
    }
    const double s = root_sum * root_sum;
    const double pt = trace_norm(partial_transpose(rho));
    const double re = trace_norm(realign(rho));
    const double err = std::max({std::abs(pt - s), std::abs(re - s), std::abs(pt - re)});
    const bool bracketed = s >= 1.0 && s <= lambdas.rank();
    t.check(err <= 1e-8 && bracketed, err, at("draw %d dims %dx%d", k, dims.a, dims.b));
  }
  return {t.ok(), t.summary()};
}

Verdict werner_gap() {
  Tally equal;
  Tally gap;
  for (int k = 1; k <= 21; ++k) {
    const double w = 0.5 + k * 0.5 / 21.0;
    for (double a : kAlphas) {
      const double closed = (std::pow(2.0, 1.0 - a) - 1.0) * (2.0 * w - 1.0);
      const double err = std::abs(lower_bound_alpha(werner(2, w), AlphaParam(a)).lower_bound - closed);
      equal.check(err <= 1e-8, err, at("d=2 W=%g alpha=%g", w, a));
      if (w < 0.6) {
        continue;
      }
      for (int d : {3, 4}) {
        const double margin = werner_alpha(w, AlphaParam(a)) - lower_bound_alpha(werner(d, w), AlphaParam(a)).lower_bound;
        gap.check(margin >= 1e-6, -margin, at("d=%d W=%g alpha=%g", d, w, a));
      }
    }
  }
  return {equal.ok() && gap.ok(), "d=2: " + equal.summary() + "; d=3,4: " + gap.summary()};
}

std::vector<std::vector<double>> parse_csv_numbers(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(std::stod(cell));
    }
    rows.push_back(row);
  }
  return rows;
}

Verdict crossover_constants() {
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run({"crossover", "--format", "csv"}, out, err) != cli::kExitOk) {
    return {false, "crossover command failed: " + err.str()};
  }
  const double d_star = parse_csv_numbers(out.str()).at(0).at(0);
  const bool d_ok = std::abs(d_star - 5.1508) <= 1e-3;

  std::ostringstream sweep_out;
  if (cli::run({"sweep", "--family", "werner", "--alpha", "0.5", "--include", "alpha,eof", "--start", "0.55",
                "--end", "0.65", "--steps", "101"},
               sweep_out, err) != cli::kExitOk) {
    return {false, "sweep command failed: " + err.str()};
  }
  const auto rows = parse_csv_numbers(sweep_out.str());
  int sign_changes = 0;
  double crossing = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double prev = rows[i - 1][2] - rows[i - 1][1];
    const double cur = rows[i][2] - rows[i][1];
    if ((prev < 0.0) != (cur < 0.0)) {
      ++sign_changes;
      crossing = rows[i][0];
    }
  }
  const double last = rows.back()[2] - rows.back()[1];
  const bool w_ok = sign_changes == 1 && last > 0.0;
  std::ostringstream detail;
  detail << "d* = " << d_star << ", E_F - C_1/2 changes sign " << sign_changes << " time(s) near W = " << crossing
         << ", value at W = 0.65: " << last;
  return {d_ok && w_ok, detail.str()};
}

Verdict appendix_b_oracle() {
  Tally grid;
  Tally vertex;
  for (int d = 2; d <= 6; ++d) {
    for (int k = 1; k <= 21; ++k) {
      const double f = fidelity_grid(d, k);
      for (double a : kAlphas) {
        const double excess = eta_isotropic_closed(d, f, AlphaParam(a)) - eta_isotropic_bruteforce(d, f, AlphaParam(a)).value;
        grid.check(excess <= 1e-9, excess, at("d=%d F=%g alpha=%g", d, f, a));
      }
    }
    for (int n = 2; n <= d; ++n) {
      const double f = static_cast<double>(n) / d;
      for (double a : kAlphas) {
        const double err = std::abs(eta_isotropic_bruteforce(d, f, AlphaParam(a)).value - eta_isotropic_closed(d, f, AlphaParam(a)));
        vertex.check(err <= 1e-9, err, at("d=%d F=%g alpha=%g", d, f, a));
      }
    }
  }
  return {grid.ok() && vertex.ok(), "grid: " + grid.summary() + "; integer Fd: " + vertex.summary()};
}

Verdict roof_sandwich() {
  const auto start = std::chrono::steady_clock::now();
  Tally family;
  for (int d : {2, 3}) {
    for (double a : {0.25, 0.5}) {
      for (int werner_case = 0; werner_case < 2; ++werner_case) {
        for (int k = 1; k <= 10; ++k) {
          const double x = werner_case ? 0.5 + k * 0.5 / 11.0 : 1.0 / d + k * (1.0 - 1.0 / d) / 11.0;
          const DensityMatrix rho = werner_case ? werner(d, x) : isotropic(d, x);
          const double closed = werner_case ? werner_alpha(x, AlphaParam(a)) : isotropic_alpha(d, x, AlphaParam(a));
          // Both families have full rank d^2 at interior points; twice that
          // many members leaves room for the product part of the optimum.
          RoofConfig config;
          config.ensemble_size = 2 * d * d;
          const double value = roof_upper_bound(rho, AlphaParam(a), config).value;
          const double off = value - closed;
          const bool ok = off >= -1e-7 && off <= 1e-3;
          family.check(ok, std::max(-off - 1e-7, off - 1e-3),
                       at(werner_case ? "werner d=%d W=%g alpha=%g" : "isotropic d=%d F=%g alpha=%g", d, x, a));
          std::printf("  roof %-9s d=%d x=%.4f alpha=%.2f value-closed=% .3e %s\n", werner_case ? "werner" : "isotropic",
                      d, x, a, off, ok ? "ok" : "OUT OF RANGE");
          std::fflush(stdout);
        }
      }
    }
  }
  Tally random;
  Rng rng(4242);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = random_mixed({2, 2}, rng, 1 + k % 4);
    const AlphaParam a(k % 2 ? 0.5 : 0.25);
    RoofConfig config;
    config.seed = static_cast<std::uint64_t>(k);
    const double excess = lower_bound_alpha(rho, a).lower_bound - roof_upper_bound(rho, a, config).value;
    random.check(excess <= 1e-7, excess, at("random state %d alpha=%g", k, a.value()));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = seconds <= 120.0;
  std::ostringstream detail;
  detail << "families: " << family.summary() << "; random: " << random.summary() << "; runtime " << seconds
         << " s (limit 120 s)";
  return {family.ok() && random.ok() && fast, detail.str()};
}

Verdict measure_axioms() {
  Rng rng(777);
  Tally concave;
  for (int k = 0; k < 1000; ++k) {
    const Dims dims{1, 2 + static_cast<int>(rng.uniform() * 8)};
    const ComplexMatrix rho = random_mixed(dims, rng, 1 + static_cast<int>(rng.uniform() * dims.total())).matrix();
    const ComplexMatrix sigma = random_mixed(dims, rng, 1 + static_cast<int>(rng.uniform() * dims.total())).matrix();
    const double t = rng.uniform();
    const double a = 0.5 * rng.uniform();
    const double lhs = trace_power(t * rho + (1.0 - t) * sigma, a) - 1.0;
    const double rhs = t * (trace_power(rho, a) - 1.0) + (1.0 - t) * (trace_power(sigma, a) - 1.0);
    concave.check(lhs >= rhs - 1e-9, rhs - lhs, at("draw %d t=%g alpha=%g", k, t, a));
  }
  Tally schur;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + static_cast<int>(rng.uniform() * 5);
    const auto y = testing::random_simplex(n, rng);
    const ComplexMatrix u = haar_unitary(n, rng);
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        x[static_cast<std::size_t>(i)] += std::norm(u(i, j)) * y[static_cast<std::size_t>(j)];
      }
    }
    const SchmidtVector sx(x);
    const SchmidtVector sy(y);
    const AlphaParam a(0.5 * rng.uniform());
    const double deficit = alpha_concurrence_schmidt(sy, a) - alpha_concurrence_schmidt(sx, a);
    schur.check(majorization_check(sx, sy) && deficit <= 1e-12, deficit, at("pair %d n=%d alpha=%g", k, n, a.value()));
  }
  Tally range;
  for (int k = 0; k < 1000; ++k) {
    const int d = 2 + static_cast<int>(rng.uniform() * 4);
    const double a = 0.5 * rng.uniform();
    const double c = alpha_concurrence_pure(random_pure({d, d}, rng), AlphaParam(a));
    const double top = std::pow(d, 1.0 - a) - 1.0;
    range.check(c >= 0.0 && c <= top, std::max(-c, c - top), at("draw %d d=%d alpha=%g", k, d, a));
  }
  return {concave.ok() && schur.ok() && range.ok(),
          "concavity: " + concave.summary() + "; Schur: " + schur.summary() + "; range: " + range.summary()};
}

Verdict family_consistency() {
  Tally t;
  for (int k = 0; k <= 100; ++k) {
    const double w = k / 100.0;
    for (double a : kAlphas) {
      const double err =
          std::abs(werner_alpha(w, AlphaParam(a)) - (std::pow(2.0, 1.0 - a) - 1.0) * werner_concurrence(w));
      t.check(err <= 1e-12, err, at("W=%g alpha=%g", w, a));
    }
  }
  return {t.ok(), t.summary()};
}

}  // namespace
}  // namespace alphaconc

int main() {
  using alphaconc::Verdict;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"isotropic exactness", alphaconc::isotropic_exactness},
      {"norm identity", alphaconc::norm_identity},
      {"Werner closed form and gap", alphaconc::werner_gap},
      {"crossover constants", alphaconc::crossover_constants},
      {"eta brute-force oracle", alphaconc::appendix_b_oracle},
      {"roof sandwich", alphaconc::roof_sandwich},
      {"measure axioms", alphaconc::measure_axioms},
      {"family self-consistency", alphaconc::family_consistency},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(),
                seconds);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
