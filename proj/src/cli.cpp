// Copyright 2026 The qfdiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfdiv/cli.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qfdiv/errors.hpp"
#include "qfdiv/io.hpp"

namespace qfdiv {

namespace {

struct Options {
  std::string x_path;
  std::string y_path;
  std::string kind;
  std::string f = "neg-log";
  double alpha = 0.0;
  double beta = 0.0;
  std::string expr;
  bool assert_anti_monotone = false;
  std::vector<double> alphas;
  bool generic = false;
  std::string witness_out;
  int max_iterations = OptimizerConfig{}.max_iterations;
  double convergence_tol = OptimizerConfig{}.convergence_tol;
  std::string check = "dpi-partial-trace";
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  int trials = 100;
  double tolerance = 0.0;
  std::string spec_path;
  std::string out;
  std::string format = "json";

  // Set after parsing when the flag was given.
  bool has_alpha = false;
  bool has_beta = false;
  bool has_expr = false;
  bool has_tolerance = false;
  bool has_dims = false;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

HermitianMatrix require_matrix(const std::string& path, const char* flag) {
  if (path.empty()) throw InvalidInput(std::string(flag) + ": required");
  return read_hermitian_file(path);
}

FunctionSelector selector(const Options& o) {
  FunctionSelector sel;
  sel.name = o.f;
  if (o.has_alpha) sel.alpha = o.alpha;
  if (o.has_beta) sel.beta = o.beta;
  if (o.has_expr) sel.expr = o.expr;
  sel.assert_anti_monotone = o.assert_anti_monotone;
  return sel;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : ""; }

void emit(const Options& o, const Json& json, const std::string& csv, std::ostream& out) {
  const std::string text = o.format == "csv" ? csv : json.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

int cmd_compute(const Options& o, std::ostream& out) {
  const auto x = require_matrix(o.x_path, "x");
  const auto y = require_matrix(o.y_path, "y");
  std::vector<double> grid = o.alphas;
  if (grid.empty() && o.has_alpha) grid.push_back(o.alpha);

  struct Row {
    std::string divergence;
    double alpha = kNaN;
    double value = 0.0;
  };
  std::vector<Row> rows;
  auto needs_alpha = [&] {
    if (grid.empty()) throw InvalidInput("alpha: required for --kind " + o.kind);
  };
  if (o.kind == "relative-entropy") {
    rows.push_back({o.kind, kNaN, quantum_relative_entropy(x, y)});
  } else if (o.kind == "fidelity") {
    rows.push_back({o.kind, kNaN, fidelity(x, y)});
  } else if (o.kind == "petz-renyi") {
    needs_alpha();
    for (double a : grid) rows.push_back({o.kind, a, petz_renyi(x, y, a)});
  } else if (o.kind == "sandwiched") {
    needs_alpha();
    for (double a : grid) rows.push_back({o.kind, a, sandwiched_renyi(x, y, a)});
  } else if (o.kind == "petz-f") {
    const auto f = make_function(selector(o));
    rows.push_back({"petz-f:" + f.name(), o.has_alpha ? o.alpha : kNaN, petz_f_divergence(x, y, f)});
  } else {
    throw InvalidInput("kind: unknown '" + o.kind + "' (relative-entropy, petz-renyi, sandwiched, petz-f, fidelity)");
  }

  Json results = Json::array();
  std::string csv = "divergence,alpha,value\n";
  for (const auto& r : rows) {
    Json entry = {{"divergence", r.divergence}, {"value", number_or_null(r.value)}};
    if (std::isfinite(r.alpha)) entry["alpha"] = r.alpha;
    results.push_back(std::move(entry));
    csv += csv_field(r.divergence) + "," + csv_number(r.alpha) + "," + csv_number(r.value) + "\n";
  }
  emit(o, results.size() == 1 ? results[0] : results, csv, out);
  return kExitOk;
}

int cmd_optimize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto x = require_matrix(o.x_path, "x");
  const auto y = require_matrix(o.y_path, "y");
  const auto f = make_function(selector(o));
  OptimizerConfig cfg;
  cfg.max_iterations = o.max_iterations;
  cfg.convergence_tol = o.convergence_tol;
  cfg.seed = o.seed;
  cfg.validate();

  if (!f.is_operator_anti_monotone()) {
    err << "warning: " << f.name()
        << " is not asserted operator anti-monotone; the result is a stationary value, not a certified supremum\n";
  }
  const auto report = o.generic ? optimize_tau_generic(x, y, f, cfg) : optimized_f_divergence(x, y, f, cfg);

  Json json = {{"f", f.name()},
               {"value", number_or_null(report.value)},
               {"label", report.certified_supremum ? "supremum" : "stationary value"},
               {"method", std::string(to_string(report.method))},
               {"iterations", report.iterations},
               {"residual", number_or_null(report.residual)},
               {"converged", report.converged},
               {"certified_supremum", report.certified_supremum}};
  std::string header = "f,value,label,method,iterations,residual,converged,certified_supremum";
  std::string row = csv_field(f.name()) + "," + csv_number(report.value) + "," +
                    (report.certified_supremum ? "supremum" : "stationary value") + "," +
                    std::string(to_string(report.method)) + "," + std::to_string(report.iterations) + "," +
                    csv_number(report.residual) + "," + (report.converged ? "true" : "false") + "," +
                    (report.certified_supremum ? "true" : "false");

  // The value in the usual divergence units.
  if (f.tag() == FunctionTag::NegLog) {
    const double d = report.value / x.trace();
    json["relative_entropy"] = number_or_null(d);
    header += ",relative_entropy";
    row += "," + csv_number(d);
  } else if (f.tag() == FunctionTag::NegPower || f.tag() == FunctionTag::Power) {
    const double beta = f.beta();
    const double alpha = beta == -1.0 ? HUGE_VAL : 1.0 / (1.0 + beta);
    const double factor = std::isinf(alpha) ? 1.0 : alpha / (alpha - 1.0);
    const double d = factor * std::log(std::abs(report.value));
    json["alpha"] = number_or_null(alpha);
    json["sandwiched_renyi"] = number_or_null(d);
    header += ",alpha,sandwiched_renyi";
    row += "," + (std::isinf(alpha) ? std::string("inf") : csv_number(alpha)) + "," + csv_number(d);
  }

  if (!o.witness_out.empty() && report.witness_tau) {
    write_matrix_file(o.witness_out, *report.witness_tau);
    json["witness_file"] = o.witness_out;
  }
  emit(o, json, header + "\n" + row + "\n", out);
  if (!report.converged) {
    err << "warning: optimizer stopped before convergence (residual " << format_double(report.residual) << ")\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

int finish_suite(const Options& o, const SuiteReport& report, std::ostream& out, std::ostream& err) {
  std::vector<std::vector<std::string>> files;
  if (!o.out.empty()) files = write_witness_files(report, o.out + ".witness");
  emit(o, suite_report_to_json(report, files), suite_report_to_csv(report), out);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed()) {
        err << "FAIL " << c.name << ": " << c.failures << " failures, " << c.inconclusive
            << " inconclusive, worst margin " << format_double(c.worst_margin) << "\n";
      }
    }
    return kExitCheckFailure;
  }
  return kExitOk;
}

int cmd_dpi(const Options& o, std::ostream& out, std::ostream& err) {
  const CheckKind kind = check_kind_from_string(o.check);
  const bool bipartite =
      kind == CheckKind::DpiPartialTrace || kind == CheckKind::ProofChain || kind == CheckKind::PetzDpi;
  SystemDims dims = bipartite ? SystemDims{2, 2} : SystemDims{2};
  if (o.has_dims) dims = SystemDims(o.dims);
  auto spec = TrialSpec::make(kind, dims, make_function(selector(o)), o.trials, o.seed);
  if (o.has_tolerance) spec.tolerance = o.tolerance;
  spec.validate();
  return finish_suite(o, run_suite({spec}, o.seed), out, err);
}

int cmd_suite(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<TrialSpec> specs;
  std::uint64_t seed = o.seed;
  if (o.spec_path.empty()) {
    if (o.trials < 1) throw InvalidInput("trials: must be at least 1");
    specs = default_suite(seed, o.trials);
  } else {
    const Json j = read_json_file(o.spec_path);
    try {
      specs = suite_from_json(j, seed, o.trials);
    } catch (const InvalidInput& e) {
      throw InvalidInput(o.spec_path + ": " + e.what());
    }
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
  }
  return finish_suite(o, run_suite(specs, seed), out, err);
}

int cmd_limit_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto x = DensityOperator::normalized(require_matrix(o.x_path, "x")).matrix();
  const auto y = require_matrix(o.y_path, "y");
  const double d = quantum_relative_entropy(x, y);

  constexpr int kSteps = 4;
  constexpr double kFinalTolerance = 1e-3;
  // Slack for the non-increasing test when errors sit at rounding level.
  constexpr double kRoundoff = 1e-12;

  Json rows = Json::array();
  std::string csv = "alpha,sandwiched,petz,sandwiched_error,petz_error\n";
  bool passed = true;
  for (const double side : {-1.0, 1.0}) {
    double prev_s = HUGE_VAL;
    double prev_p = HUGE_VAL;
    for (int k = 1; k <= kSteps; ++k) {
      const double alpha = 1.0 + side * std::pow(10.0, -k);
      const double s = sandwiched_renyi(x, y, alpha);
      const double p = petz_renyi(x, y, alpha);
      const double es = std::abs(s - d);
      const double ep = std::abs(p - d);
      if (es > prev_s + kRoundoff || ep > prev_p + kRoundoff) passed = false;
      if (k == kSteps && (es > kFinalTolerance || ep > kFinalTolerance)) passed = false;
      prev_s = es;
      prev_p = ep;
      rows.push_back({{"alpha", alpha}, {"sandwiched", s}, {"petz", p}, {"sandwiched_error", es}, {"petz_error", ep}});
      csv += csv_number(alpha) + "," + csv_number(s) + "," + csv_number(p) + "," + csv_number(es) + "," +
             csv_number(ep) + "\n";
    }
  }
  emit(o, {{"relative_entropy", d}, {"passed", passed}, {"grid", std::move(rows)}}, csv, out);
  if (!passed) {
    err << "FAIL limit-check: errors do not shrink monotonically to within " << format_double(kFinalTolerance)
        << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

void add_io_flags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Write the result to this file instead of stdout");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_pair_flags(CLI::App* sub, Options& o) {
  sub->add_option("--x", o.x_path, "Matrix JSON file for X")->check(CLI::ExistingFile);
  sub->add_option("--y", o.y_path, "Matrix JSON file for Y")->check(CLI::ExistingFile);
}

void add_function_flags(CLI::App* sub, Options& o) {
  sub->add_option("--f", o.f, "Generator: neg-log, neg-power, power or custom");
  sub->add_option("--alpha", o.alpha, "Renyi order; sets beta = (1 - alpha) / alpha for the power families");
  sub->add_option("--beta", o.beta, "Exponent of the power families");
  sub->add_option("--expr", o.expr, "Expression in x for --f custom");
  sub->add_flag("--assert-anti-monotone", o.assert_anti_monotone,
                "Declare the custom generator operator anti-monotone");
}

void add_trial_flags(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Root seed");
  sub->add_option("--trials", o.trials, "Trials per check");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimized quantum f-divergences and their data-processing checks", "qfdiv"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Evaluate a divergence of two matrices");
  add_pair_flags(compute, o);
  add_function_flags(compute, o);
  add_io_flags(compute, o);
  compute->add_option("--kind", o.kind, "relative-entropy, petz-renyi, sandwiched, petz-f or fidelity")->required();
  compute->add_option("--alphas", o.alphas, "Comma separated grid of orders, one output row each")->delimiter(',');

  auto* optimize = app.add_subcommand("optimize", "Maximize the objective over tau");
  add_pair_flags(optimize, o);
  add_function_flags(optimize, o);
  add_io_flags(optimize, o);
  optimize->add_flag("--generic", o.generic, "Use the iterative optimizer even when a closed form exists");
  optimize->add_option("--witness-out", o.witness_out, "Write the optimal tau to this matrix file");
  optimize->add_option("--max-iterations", o.max_iterations, "Iteration budget");
  optimize->add_option("--tol", o.convergence_tol, "Convergence tolerance");
  optimize->add_option("--seed", o.seed, "Seed for restart perturbations");

  auto* dpi = app.add_subcommand("dpi", "Randomized data-processing check");
  add_function_flags(dpi, o);
  add_trial_flags(dpi, o);
  add_io_flags(dpi, o);
  dpi->add_option("--check", o.check,
                  "dpi-partial-trace, dpi-channel, isometric-invariance, operator-jensen, proof-chain or petz-dpi");
  auto* dims_opt = dpi->add_option("--dims", o.dims, "Subsystem dimensions, e.g. 2,2")->delimiter(',');
  auto* tol_opt = dpi->add_option("--tolerance", o.tolerance, "Margin tolerance");

  auto* suite = app.add_subcommand("suite", "Run the certification suite");
  add_trial_flags(suite, o);
  add_io_flags(suite, o);
  suite->add_option("--spec", o.spec_path, "JSON suite definition")->check(CLI::ExistingFile);

  auto* limit = app.add_subcommand("limit-check", "Both Renyi families against the relative entropy near alpha = 1");
  add_pair_flags(limit, o);
  add_io_flags(limit, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  for (auto* sub : {compute, optimize, dpi}) {
    if (sub->count("--alpha") > 0) o.has_alpha = true;
    if (sub->count("--beta") > 0) o.has_beta = true;
    if (sub->count("--expr") > 0) o.has_expr = true;
  }
  o.has_dims = dims_opt->count() > 0;
  o.has_tolerance = tol_opt->count() > 0;
  if (o.has_dims) {
    for (std::size_t d : o.dims) {
      if (d == 0) {
        err << "error: dims: factors must be positive\n";
        return kExitValidation;
      }
    }
  }

  try {
    if (*compute) return cmd_compute(o, out);
    if (*optimize) return cmd_optimize(o, out, err);
    if (*dpi) return cmd_dpi(o, out, err);
    if (*suite) return cmd_suite(o, out, err);
    return cmd_limit_check(o, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainViolation& e) {
    err << "domain violation: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NonConvergence& e) {
    err << "non-convergence: " << e.what() << " (best value " << format_double(e.best_value()) << ")\n";
    return kExitNonConvergence;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qfdiv
