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

#include "qfdiv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qfdiv/errors.hpp"
#include "qfdiv/random.hpp"

namespace qfdiv {

namespace {

double converged_value(const HermitianMatrix& x, const HermitianMatrix& y, const AntiMonotoneFunction& f,
                       const OptimizerConfig& cfg) {
  const auto report = optimized_f_divergence(x, y, f, cfg);
  if (!report.converged) throw NonConvergence("optimizer did not converge for " + f.name(), report.value);
  return report.value;
}

HermitianMatrix reduce_to_first(const HermitianMatrix& m, const SystemDims& dims) {
  if (dims.size() != 2) throw InvalidInput("expected bipartite dims");
  if (dims.total() != m.dim()) throw InvalidInput("dims do not match the operator dimension");
  return HermitianMatrix::hermitian_part(partial_trace(m, dims, 0));
}

HermitianMatrix conjugate(const ComplexMatrix& v, const HermitianMatrix& x) {
  return HermitianMatrix::hermitian_part(v * x.matrix() * v.adjoint());
}

double vector_distance(const PureVector& a, const PureVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = std::max(s, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return s;
}

}  // namespace

double check_dpi_partial_trace(const HermitianMatrix& x_ab, const HermitianMatrix& y_ab, const SystemDims& dims,
                               const AntiMonotoneFunction& f, const OptimizerConfig& cfg) {
  const auto x_a = reduce_to_first(x_ab, dims);
  const auto y_a = reduce_to_first(y_ab, dims);
  return converged_value(x_ab, y_ab, f, cfg) - converged_value(x_a, y_a, f, cfg);
}

double check_dpi_channel(const HermitianMatrix& x, const HermitianMatrix& y, const QuantumChannel& ch,
                         const AntiMonotoneFunction& f, const OptimizerConfig& cfg) {
  const auto v = stinespring_isometry(ch);
  const std::size_t env = ch.kraus_ops().size();
  const auto nx = apply_dilation(v, x, env);
  const auto ny = apply_dilation(v, y, env);
  require_positive_definite(nx, "channel output N(X)");
  require_positive_definite(ny, "channel output N(Y)");
  return converged_value(x, y, f, cfg) - converged_value(nx, ny, f, cfg);
}

double check_isometric_invariance(const HermitianMatrix& x, const HermitianMatrix& y, const Isometry& u,
                                  const AntiMonotoneFunction& f, const OptimizerConfig& cfg) {
  if (u.input_dim() != u.output_dim()) {
    throw InvalidInput("check_isometric_invariance: only square unitaries keep the operators invertible");
  }
  const auto ux = conjugate(u.matrix(), x);
  const auto uy = conjugate(u.matrix(), y);
  return std::abs(converged_value(x, y, f, cfg) - converged_value(ux, uy, f, cfg));
}

double check_operator_jensen(const Isometry& v, const HermitianMatrix& a, const AntiMonotoneFunction& f) {
  if (a.dim() != v.output_dim()) throw InvalidInput("check_operator_jensen: A must act on the isometry output");
  const ScalarFunction fn = [&f](double t) { return f(t); };
  const auto& vm = v.matrix();
  const auto fa = matrix_function(a, fn);
  const auto compressed = HermitianMatrix::hermitian_part(vm.adjoint() * a.matrix() * vm);
  const auto lhs = HermitianMatrix::hermitian_part(vm.adjoint() * fa.matrix() * vm);
  return eig_hermitian(lhs - matrix_function(compressed, fn)).min_eigenvalue();
}

double ProofChainReport::worst() const {
  return std::min({margin, -identity_error, -recovery_error, -tau_trace_error});
}

ProofChainReport check_proof_chain(const HermitianMatrix& x_ab, const HermitianMatrix& y_ab, const SystemDims& dims,
                                   const DensityOperator& omega_a, const AntiMonotoneFunction& f) {
  const auto x_a = reduce_to_first(x_ab, dims);
  const auto y_a = reduce_to_first(y_ab, dims);
  if (omega_a.dim() != dims[0]) throw InvalidInput("check_proof_chain: omega_A must act on A");

  ProofChainReport report;
  const auto recovery = petz_recovery_channel(x_ab, dims);
  const auto tau_ab = apply_channel(recovery, omega_a);
  report.tau_trace_error = std::abs(tau_ab.trace() - 1.0);
  report.tau_min_eigenvalue = eig_hermitian(tau_ab).min_eigenvalue();
  require_positive_definite(tau_ab, "tau_AB");

  const auto v = petz_recovery_isometry(x_ab, dims);
  const auto tau_inv = matrix_power(tau_ab, -1.0);
  const auto lhs = v.matrix().adjoint() * kron(tau_inv, y_ab.transpose()) * v.matrix();
  const auto rhs = kron(matrix_power(omega_a, -1.0), y_a.transpose());
  report.identity_error = max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs());

  report.recovery_error =
      std::max(max_abs_diff(apply_channel(recovery, x_a), x_ab),
               vector_distance(apply(v.matrix(), purification(x_a)), purification(x_ab)));

  report.margin = optimized_objective(x_ab, y_ab, tau_ab, f) - optimized_objective(x_a, y_a, omega_a, f);
  return report;
}

double check_petz_dpi(const HermitianMatrix& x_ab, const HermitianMatrix& y_ab, const SystemDims& dims,
                      const AntiMonotoneFunction& f) {
  const auto x_a = reduce_to_first(x_ab, dims);
  const auto y_a = reduce_to_first(y_ab, dims);
  return petz_f_divergence(x_ab, y_ab, f) - petz_f_divergence(x_a, y_a, f);
}

namespace {

struct CheckInfo {
  CheckKind kind;
  std::string_view name;
  bool bipartite;
  double tolerance;
};

constexpr CheckInfo kChecks[] = {
    {CheckKind::DpiPartialTrace, "dpi-partial-trace", true, 1e-8},
    {CheckKind::DpiChannel, "dpi-channel", false, 1e-8},
    {CheckKind::IsometricInvariance, "isometric-invariance", false, 1e-6},
    {CheckKind::OperatorJensen, "operator-jensen", false, 1e-9},
    {CheckKind::ProofChain, "proof-chain", true, 1e-9},
    {CheckKind::PetzDpi, "petz-dpi", true, 1e-9},
};

const CheckInfo& info(CheckKind kind) {
  for (const auto& c : kChecks)
    if (c.kind == kind) return c;
  throw InvalidInput("unknown check kind");
}

std::string dims_label(const SystemDims& dims) {
  std::string out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k > 0) out += 'x';
    out += std::to_string(dims[k]);
  }
  return out;
}

constexpr int kChannelAttempts = 16;

struct Trial {
  double margin = 0.0;
  std::vector<NamedMatrix> inputs;
};

// Runs trial `index` of `spec`; NonConvergence and DomainViolation from
// unlucky draws are left to the caller.
Trial run_trial(const TrialSpec& spec, int index) {
  const std::uint64_t s = derive_seed(spec.seed, static_cast<std::uint64_t>(index));
  const SystemDims& dims = spec.dims;
  Trial t;
  switch (spec.check) {
    case CheckKind::DpiPartialTrace:
    case CheckKind::ProofChain:
    case CheckKind::PetzDpi: {
      const auto x = random_density(dims.total(), derive_seed(s, 0));
      const auto y = random_density(dims.total(), derive_seed(s, 1));
      t.inputs = {{"X", x.matrix().matrix(), dims}, {"Y", y.matrix().matrix(), dims}};
      if (spec.check == CheckKind::DpiPartialTrace) {
        t.margin = check_dpi_partial_trace(x, y, dims, spec.f, spec.optimizer);
      } else if (spec.check == CheckKind::PetzDpi) {
        t.margin = check_petz_dpi(x, y, dims, spec.f);
      } else {
        const auto omega = random_density(dims[0], derive_seed(s, 2));
        t.inputs.push_back({"omega", omega.matrix().matrix(), std::nullopt});
        t.margin = check_proof_chain(x, y, dims, omega, spec.f).worst();
      }
      break;
    }
    case CheckKind::DpiChannel: {
      const std::size_t d = dims[0];
      const auto x = random_density(d, derive_seed(s, 0));
      const auto y = random_density(d, derive_seed(s, 1));
      const std::size_t n_kraus = 2 + static_cast<std::size_t>(index % 2);
      for (int attempt = 0;; ++attempt) {
        const auto ch = random_channel(d, d, n_kraus, derive_seed(s, 2 + static_cast<std::uint64_t>(attempt)));
        try {
          t.margin = check_dpi_channel(x, y, ch, spec.f, spec.optimizer);
        } catch (const DomainViolation&) {
          if (attempt + 1 >= kChannelAttempts) throw;
          continue;  // output not invertible; draw another channel
        }
        t.inputs = {{"X", x.matrix().matrix(), std::nullopt}, {"Y", y.matrix().matrix(), std::nullopt}};
        for (std::size_t k = 0; k < ch.kraus_ops().size(); ++k)
          t.inputs.push_back({"K" + std::to_string(k), ch.kraus_ops()[k], std::nullopt});
        break;
      }
      break;
    }
    case CheckKind::IsometricInvariance: {
      const std::size_t d = dims[0];
      const auto x = random_density(d, derive_seed(s, 0));
      const auto y = random_density(d, derive_seed(s, 1));
      const auto u = random_unitary(d, derive_seed(s, 2));
      t.inputs = {{"X", x.matrix().matrix(), std::nullopt},
                  {"Y", y.matrix().matrix(), std::nullopt},
                  {"U", u.matrix(), std::nullopt}};
      t.margin = -check_isometric_invariance(x, y, u, spec.f, spec.optimizer);
      break;
    }
    case CheckKind::OperatorJensen: {
      const std::size_t d = dims[0];
      const auto v = random_isometry(d, 2 * d, derive_seed(s, 0));
      const auto a = random_density(2 * d, derive_seed(s, 1)).matrix().scaled(static_cast<double>(2 * d));
      t.inputs = {{"V", v.matrix(), std::nullopt}, {"A", a.matrix(), std::nullopt}};
      t.margin = check_operator_jensen(v, a, spec.f);
      break;
    }
  }
  return t;
}

}  // namespace

std::string_view to_string(CheckKind kind) { return info(kind).name; }

CheckKind check_kind_from_string(std::string_view name) {
  for (const auto& c : kChecks)
    if (c.name == name) return c.kind;
  throw InvalidInput("unknown check '" + std::string(name) + "'");
}

double default_tolerance(CheckKind kind) { return info(kind).tolerance; }

TrialSpec TrialSpec::make(CheckKind check, SystemDims dims, AntiMonotoneFunction f, int n_trials,
                          std::uint64_t seed) {
  TrialSpec spec;
  spec.check = check;
  spec.dims = std::move(dims);
  spec.f = std::move(f);
  spec.n_trials = n_trials;
  spec.seed = seed;
  spec.tolerance = default_tolerance(check);
  return spec;
}

void TrialSpec::validate() const {
  if (n_trials < 1) throw InvalidInput("trials: must be at least 1");
  if (!(tolerance > 0.0)) throw InvalidInput("tolerance: must be positive");
  const std::size_t expected = info(check).bipartite ? 2 : 1;
  if (dims.size() != expected) {
    throw InvalidInput("dims: " + std::string(to_string(check)) + " takes " + std::to_string(expected) +
                       (expected == 1 ? " factor" : " factors"));
  }
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k] < 1) throw InvalidInput("dims: factors must be positive");
  optimizer.validate();
}

bool CheckReport::passed() const {
  return failures == 0 && inconclusive <= kMaxInconclusiveFraction * static_cast<double>(trials);
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

CheckReport run_trials(const TrialSpec& spec) {
  spec.validate();
  CheckReport report;
  report.check = spec.check;
  report.name = std::string(to_string(spec.check)) + "/" + spec.f.name() + "/" + dims_label(spec.dims);
  report.trials = spec.n_trials;
  report.tolerance = spec.tolerance;
  report.worst_margin = std::numeric_limits<double>::infinity();

  for (int i = 0; i < spec.n_trials; ++i) {
    Trial t;
    try {
      t = run_trial(spec, i);
    } catch (const NonConvergence&) {
      ++report.inconclusive;
      continue;
    } catch (const DomainViolation&) {
      ++report.inconclusive;
      continue;
    }
    if (t.margin >= -spec.tolerance) {
      ++report.passes;
    } else {
      ++report.failures;
    }
    if (t.margin < report.worst_margin || report.worst_trial < 0) {
      report.worst_margin = t.margin;
      report.worst_trial = i;
      report.witness = std::move(t.inputs);
    }
  }
  return report;
}

SuiteReport run_suite(const std::vector<TrialSpec>& specs, std::uint64_t seed) {
  SuiteReport report;
  report.seed = seed;
  report.checks.reserve(specs.size());
  for (const auto& spec : specs) report.checks.push_back(run_trials(spec));
  return report;
}

std::vector<TrialSpec> default_suite(std::uint64_t seed, int n_trials) {
  const std::vector<AntiMonotoneFunction> generators = {
      AntiMonotoneFunction::neg_log(),    AntiMonotoneFunction::neg_power(1.0 / 3.0),
      AntiMonotoneFunction::neg_power(0.5), AntiMonotoneFunction::power(-0.5),
      AntiMonotoneFunction::power(-1.0)};
  const CheckKind kinds[] = {CheckKind::DpiPartialTrace,   CheckKind::DpiChannel, CheckKind::IsometricInvariance,
                             CheckKind::OperatorJensen,   CheckKind::ProofChain, CheckKind::PetzDpi};
  std::vector<TrialSpec> specs;
  std::uint64_t index = 0;
  for (CheckKind kind : kinds) {
    const SystemDims dims = info(kind).bipartite ? SystemDims{2, 2} : SystemDims{2};
    for (const auto& f : generators) specs.push_back(TrialSpec::make(kind, dims, f, n_trials, derive_seed(seed, index++)));
  }
  return specs;
}

}  // namespace qfdiv
