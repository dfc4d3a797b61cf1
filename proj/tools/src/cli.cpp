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

#include "alphaconc_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "alphaconc/convexroof.hpp"
#include "alphaconc/errors.hpp"
#include "alphaconc/etaopt.hpp"
#include "alphaconc/measures.hpp"
#include "alphaconc/state_io.hpp"

namespace alphaconc::cli {

namespace {

enum class Format { kText, kCsv };

std::string format_shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// An ordered list of named fields, printed as "name: value" lines or as a
// one-row CSV table.
class Report {
 public:
  explicit Report(Format format) : format_(format) {}

  void add(std::string key, std::string text) { fields_.emplace_back(std::move(key), std::move(text)); }
  void add_number(std::string key, double x) {
    add(std::move(key), format_ == Format::kText ? format_fixed10(x) : format_double17(x));
  }
  void add_numbers(std::string key, const std::vector<double>& xs) {
    std::string joined;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      joined += (i ? " " : "");
      joined += format_ == Format::kText ? format_fixed10(xs[i]) : format_double17(xs[i]);
    }
    add(std::move(key), joined);
  }

  void print(std::ostream& out) const {
    if (format_ == Format::kText) {
      for (const auto& [key, text] : fields_) {
        out << key << ": " << text << '\n';
      }
      return;
    }
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out << (i ? "," : "") << fields_[i].first;
    }
    out << '\n';
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out << (i ? "," : "") << fields_[i].second;
    }
    out << '\n';
  }

 private:
  Format format_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) {
        throw IoError("cannot write " + path);
      }
      stream_ = &file_;
    }
  }

  std::ostream& stream() { return *stream_; }

  void close(const std::string& path) {
    if (file_.is_open()) {
      file_.close();
      if (!file_) {
        throw IoError("failed writing " + path);
      }
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct CommonOptions {
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";

  Format parsed_format() const { return format == "csv" ? Format::kCsv : Format::kText; }
};

struct RoofOptions {
  int restarts = RoofConfig{}.restarts;
  int ensemble_size = 0;
  int max_iters = RoofConfig{}.max_iters;
  double step_tol = RoofConfig{}.step_tol;
  double value_tol = RoofConfig{}.value_tol;

  RoofConfig config(std::uint64_t seed) const {
    return RoofConfig{ensemble_size, restarts, max_iters, step_tol, value_tol, seed};
  }
};

void add_common(CLI::App* app, CommonOptions& opts, bool with_alpha = true) {
  if (with_alpha) {
    app->add_option("--alpha", opts.alpha, "Measure parameter in [0, 0.5]")->capture_default_str();
  }
  app->add_option("--seed", opts.seed, "Seed for all randomness")->capture_default_str();
  app->add_option("--out", opts.out, "Write the report to this file instead of stdout");
  app->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
}

void add_roof(CLI::App* app, RoofOptions& opts) {
  app->add_option("--restarts", opts.restarts, "Random restarts")->capture_default_str();
  app->add_option("--ensemble-size", opts.ensemble_size,
                  "Members per decomposition (0: min(r^2, r+4) for rank r)")
      ->capture_default_str();
  app->add_option("--max-iters", opts.max_iters, "Iteration budget per restart")->capture_default_str();
  app->add_option("--step-tol", opts.step_tol, "Smallest line-search step")->capture_default_str();
  app->add_option("--value-tol", opts.value_tol, "Convergence threshold on value changes")
      ->capture_default_str();
}

std::string dims_text(Dims dims) { return std::to_string(dims.a) + "x" + std::to_string(dims.b); }

// Exact value for rank-one inputs, where both bounds coincide.
std::optional<double> rank_one_value(const DensityMatrix& rho, AlphaParam alpha) {
  const HermitianSpectrum support = support_spectrum(rho);
  if (support.eigenvalues.size() != 1) {
    return std::nullopt;
  }
  return alpha_concurrence_pure(PureState::normalized(rho.dims(), support.eigenvectors.col(0)), alpha);
}

double lower_bound_or_exact(const DensityMatrix& rho, AlphaParam alpha) {
  if (auto exact = rank_one_value(rho, alpha)) {
    return *exact;
  }
  if (!rho.dims().square() || rho.dims().a < 2) {
    return 0.0;
  }
  return lower_bound_alpha(rho, alpha).lower_bound;
}

// Adds the roof fields; returns the exit code the search implies.
int add_roof_fields(Report& report, const DensityMatrix& rho, AlphaParam alpha,
                    const RoofConfig& config, double lower) {
  const RoofResult roof = roof_upper_bound(rho, alpha, config);
  report.add_number("roof_upper_bound", roof.value);
  report.add_number("gap", roof.value - lower);
  report.add("ensemble_size", std::to_string(roof.best.size()));
  report.add("restarts", std::to_string(config.restarts));
  report.add("iterations", std::to_string(roof.iterations));
  report.add("converged", roof.converged ? "true" : "false");
  return roof.converged ? kExitOk : kExitNotConverged;
}

int cmd_measure(const std::string& path, const CommonOptions& common, bool with_roof,
                const RoofOptions& roof_opts, std::ostream& out) {
  const AlphaParam alpha(common.alpha);
  const State state = load_state(path);
  Report report(common.parsed_format());
  report.add_number("alpha", alpha.value());
  int code = kExitOk;
  if (const auto* psi = std::get_if<PureState>(&state)) {
    report.add("kind", "pure");
    report.add("dims", dims_text(psi->dims()));
    report.add_number("c_alpha", alpha_concurrence_pure(*psi, alpha));
    const SchmidtVector lambdas = schmidt(*psi);
    report.add_numbers("schmidt", {lambdas.lambdas().begin(), lambdas.lambdas().end()});
  } else {
    const auto& rho = std::get<DensityMatrix>(state);
    report.add("kind", "mixed");
    report.add("dims", dims_text(rho.dims()));
    const BoundReport bound = lower_bound_alpha(rho, alpha);
    report.add_number("ppt_norm", bound.ppt_norm);
    report.add_number("realign_norm", bound.realign_norm);
    report.add_number("lower_bound", bound.lower_bound);
    report.add("branch", to_string(bound.branch));
    if (with_roof) {
      code = add_roof_fields(report, rho, alpha, roof_opts.config(common.seed),
                             lower_bound_or_exact(rho, alpha));
    }
  }
  Sink sink(common.out, out);
  report.print(sink.stream());
  sink.close(common.out);
  return code;
}

int cmd_roof(const std::string& path, const CommonOptions& common, const RoofOptions& roof_opts,
             std::ostream& out) {
  const AlphaParam alpha(common.alpha);
  const State state = load_state(path);
  const DensityMatrix rho = std::holds_alternative<PureState>(state)
                                ? DensityMatrix::from_pure(std::get<PureState>(state))
                                : std::get<DensityMatrix>(state);
  Report report(common.parsed_format());
  report.add_number("alpha", alpha.value());
  report.add("dims", dims_text(rho.dims()));
  const double lower = lower_bound_or_exact(rho, alpha);
  report.add_number("lower_bound", lower);
  const int code = add_roof_fields(report, rho, alpha, roof_opts.config(common.seed), lower);
  Sink sink(common.out, out);
  report.print(sink.stream());
  sink.close(common.out);
  return code;
}

struct SweepOptions {
  std::string family;
  int d = 2;
  double start = 0.0;
  double end = 1.0;
  int steps = 101;
  std::vector<double> alphas{0.5};
  std::vector<std::string> include{"alpha", "concurrence", "lower_bound"};
};

int cmd_sweep(const SweepOptions& sw, const CommonOptions& common, std::ostream& out) {
  const bool werner_family = sw.family == "werner";
  auto wants = [&](const char* what) {
    return std::find(sw.include.begin(), sw.include.end(), what) != sw.include.end();
  };
  if (wants("eof") && !werner_family) {
    throw ConfigError("eof is only available for the werner family");
  }
  if (sw.steps < 2) {
    throw ConfigError("steps must be at least 2");
  }
  if (!(sw.start >= 0.0 && sw.end <= 1.0 && sw.start <= sw.end)) {
    throw DomainError("parameter range must satisfy 0 <= start <= end <= 1");
  }
  if (sw.d < 2) {
    throw DomainError("d must be at least 2");
  }
  std::vector<AlphaParam> alphas;
  for (double a : sw.alphas) {
    alphas.emplace_back(a);
  }

  std::vector<std::string> header{"param"};
  for (double a : sw.alphas) {
    if (wants("alpha")) header.push_back("c_alpha_" + format_shortest(a));
    if (wants("lower_bound")) header.push_back("lower_bound_" + format_shortest(a));
  }
  if (wants("concurrence")) header.push_back("concurrence");
  if (wants("eof")) header.push_back("eof");

  std::vector<std::vector<double>> rows;
  for (int k = 0; k < sw.steps; ++k) {
    const double x = k + 1 == sw.steps ? sw.end
                                       : sw.start + (sw.end - sw.start) * k / (sw.steps - 1);
    std::vector<double> row{x};
    std::optional<DensityMatrix> state;
    if (wants("lower_bound")) {
      state = werner_family ? werner(sw.d, x) : isotropic(sw.d, x);
    }
    for (const AlphaParam& a : alphas) {
      if (wants("alpha")) {
        row.push_back(werner_family ? werner_alpha(x, a) : isotropic_alpha(sw.d, x, a));
      }
      if (wants("lower_bound")) {
        row.push_back(lower_bound_alpha(*state, a).lower_bound);
      }
    }
    if (wants("concurrence")) {
      row.push_back(werner_family ? werner_concurrence(x) : isotropic_concurrence(sw.d, x));
    }
    if (wants("eof")) {
      row.push_back(werner_eof(x));
    }
    rows.push_back(std::move(row));
  }

  Sink sink(common.out, out);
  std::ostream& os = sink.stream();
  if (common.parsed_format() == Format::kCsv) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      os << (i ? "," : "") << header[i];
    }
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << format_double17(row[i]);
      }
      os << '\n';
    }
  } else {
    std::size_t width = 13;
    for (const auto& h : header) {
      width = std::max(width, h.size() + 1);
    }
    for (const auto& h : header) {
      os << std::string(width - h.size(), ' ') << h;
    }
    os << '\n';
    for (const auto& row : rows) {
      for (double v : row) {
        const std::string s = format_fixed10(v);
        os << std::string(width - s.size(), ' ') << s;
      }
      os << '\n';
    }
  }
  sink.close(common.out);
  return kExitOk;
}

struct EtaOptions {
  int d = 2;
  std::optional<double> fidelity;
  std::optional<double> weight;
};

int cmd_eta(const EtaOptions& eta, const CommonOptions& common, std::ostream& out) {
  const AlphaParam alpha(common.alpha);
  if (eta.fidelity.has_value() == eta.weight.has_value()) {
    throw ConfigError("give exactly one of --fidelity and --werner");
  }
  const bool werner_case = eta.weight.has_value();
  const EtaSearch search = werner_case ? eta_werner_bruteforce(*eta.weight, alpha)
                                       : eta_isotropic_bruteforce(eta.d, *eta.fidelity, alpha);
  const double closed = werner_case ? eta_werner_closed(*eta.weight, alpha)
                                    : eta_isotropic_closed(eta.d, *eta.fidelity, alpha);
  Report report(common.parsed_format());
  report.add("family", werner_case ? "werner" : "isotropic");
  report.add("d", std::to_string(werner_case ? 2 : eta.d));
  report.add_number("param", werner_case ? *eta.weight : *eta.fidelity);
  report.add_number("alpha", alpha.value());
  report.add_number("bruteforce", search.value);
  report.add("argmin_n", std::to_string(search.best.n));
  report.add("argmin_m", std::to_string(search.best.m));
  report.add_number("closed_form", closed);
  report.add_number("difference", search.value - closed);
  Sink sink(common.out, out);
  report.print(sink.stream());
  sink.close(common.out);
  return kExitOk;
}

int cmd_crossover(const CommonOptions& common, std::ostream& out) {
  const double root = half_concurrence_crossover(1e-6);
  Report report(common.parsed_format());
  report.add_number("d_star", root);
  Sink sink(common.out, out);
  report.print(sink.stream());
  sink.close(common.out);
  return kExitOk;
}

}  // namespace

std::string format_fixed10(double x) {
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 10);
  std::string s(buf, res.ptr);
  if (s == "-0.0000000000") {
    s.erase(0, 1);
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-concurrence measures, bounds and convex-roof estimates", "alphaconc"};
  app.require_subcommand(1);

  CommonOptions common;
  RoofOptions roof_opts;
  std::string state_path;
  bool with_roof = false;
  SweepOptions sweep;
  EtaOptions eta;

  auto* measure = app.add_subcommand("measure", "Evaluate a state file");
  measure->add_option("--state", state_path, "JSON state file")->required();
  measure->add_flag("--roof", with_roof, "Also run the convex-roof search on mixed states");
  add_common(measure, common);
  add_roof(measure, roof_opts);

  auto* roof = app.add_subcommand("roof", "Convex-roof upper bound for a state file");
  roof->add_option("--state", state_path, "JSON state file")->required();
  add_common(roof, common);
  add_roof(roof, roof_opts);

  auto* sw = app.add_subcommand("sweep", "Tabulate a state family over its parameter");
  sw->add_option("--family", sweep.family, "State family")
      ->required()
      ->check(CLI::IsMember({"isotropic", "werner"}));
  sw->add_option("--d", sweep.d, "Local dimension")->capture_default_str();
  sw->add_option("--start", sweep.start, "First parameter value")->capture_default_str();
  sw->add_option("--end", sweep.end, "Last parameter value")->capture_default_str();
  sw->add_option("--steps", sweep.steps, "Number of grid points")->capture_default_str();
  sw->add_option("--alpha", sweep.alphas, "Comma-separated alpha values")
      ->delimiter(',')
      ->capture_default_str();
  sw->add_option("--include", sweep.include, "Columns: alpha, lower_bound, concurrence, eof")
      ->delimiter(',')
      ->check(CLI::IsMember({"alpha", "lower_bound", "concurrence", "eof"}))
      ->capture_default_str();
  CommonOptions sweep_common;
  sweep_common.format = "csv";
  add_common(sw, sweep_common, false);

  auto* et = app.add_subcommand("eta", "Brute-force eta minimization against its closed form");
  et->add_option("--d", eta.d, "Local dimension (isotropic case)")->capture_default_str();
  et->add_option("--fidelity", eta.fidelity, "Isotropic fidelity F");
  et->add_option("--werner", eta.weight, "Werner weight W");
  add_common(et, common);

  auto* cross = app.add_subcommand("crossover", "Dimension where C_1/2 overtakes the concurrence");
  add_common(cross, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (measure->parsed()) return cmd_measure(state_path, common, with_roof, roof_opts, out);
    if (roof->parsed()) return cmd_roof(state_path, common, roof_opts, out);
    if (sw->parsed()) return cmd_sweep(sweep, sweep_common, out);
    if (et->parsed()) return cmd_eta(eta, common, out);
    return cmd_crossover(common, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace alphaconc::cli
