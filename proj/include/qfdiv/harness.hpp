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

#pragma once

// Randomized checks of data processing and the steps used to prove it.
//
// Every check returns a signed margin: non-negative means the inequality
// holds, and a trial passes when margin >= -tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfdiv/optimizer.hpp"

namespace qfdiv {

/// Q~_f(X_AB||Y_AB) - Q~_f(X_A||Y_A). Throws NonConvergence when either
/// optimization is not converged.
double check_dpi_partial_trace(const HermitianMatrix& x_ab, const HermitianMatrix& y_ab, const SystemDims& dims,
                               const AntiMonotoneFunction& f, const OptimizerConfig& cfg = {});

/// Q~_f(X||Y) - Q~_f(N(X)||N(Y)), with N applied as its Stinespring isometry
/// followed by the partial trace over the environment. DomainViolation if an
/// output is not positive definite.
double check_dpi_channel(const HermitianMatrix& x, const HermitianMatrix& y, const QuantumChannel& ch,
                         const AntiMonotoneFunction& f, const OptimizerConfig& cfg = {});

/// |Q~_f(X||Y) - Q~_f(UXU^dagger||UYU^dagger)|. U must be square.
double check_isometric_invariance(const HermitianMatrix& x, const HermitianMatrix& y, const Isometry& u,
                                  const AntiMonotoneFunction& f, const OptimizerConfig& cfg = {});

/// Smallest eigenvalue of V^dagger f(A) V - f(V^dagger A V).
double check_operator_jensen(const Isometry& v, const HermitianMatrix& a, const AntiMonotoneFunction& f);

struct ProofChainReport {
  double tau_trace_error = 0.0;       ///< |Tr{tau_AB} - 1|
  double tau_min_eigenvalue = 0.0;
  /// max |V^dag(tau^-1 (x) Y^T)V - omega^-1 (x) Y_A^T| over max(1, max |omega^-1 (x) Y_A^T|)
  double identity_error = 0.0;
  double recovery_error = 0.0;        ///< max |R(X_A) - X_AB| and |V phi^{X_A} - phi^{X_AB}|
  double margin = 0.0;                ///< Q~_f(X_AB||Y_AB; tau_AB) - Q~_f(X_A||Y_A; omega_A)

  /// Signed summary used by the suite: the smallest of margin and the
  /// negated errors.
  double worst() const;
};

/// Builds tau_AB as the Petz recovery of omega_A and checks each identity of
/// the partial-trace argument on it.
ProofChainReport check_proof_chain(const HermitianMatrix& x_ab, const HermitianMatrix& y_ab, const SystemDims& dims,
                                   const DensityOperator& omega_a, const AntiMonotoneFunction& f);

/// Q_f(X_AB||Y_AB) - Q_f(X_A||Y_A).
double check_petz_dpi(const HermitianMatrix& x_ab, const HermitianMatrix& y_ab, const SystemDims& dims,
                      const AntiMonotoneFunction& f);

enum class CheckKind { DpiPartialTrace, DpiChannel, IsometricInvariance, OperatorJensen, ProofChain, PetzDpi };

std::string_view to_string(CheckKind kind);
/// InvalidInput on unknown names.
CheckKind check_kind_from_string(std::string_view name);
double default_tolerance(CheckKind kind);

/// One batch of seeded trials.
///
/// `dims` is bipartite for the partial-trace, proof-chain and Petz checks; its
/// first factor sets the system size for the others (channel input, unitary
/// size, isometry input with output twice as large).
struct TrialSpec {
  CheckKind check = CheckKind::DpiPartialTrace;
  SystemDims dims{2, 2};
  AntiMonotoneFunction f = AntiMonotoneFunction::neg_log();
  int n_trials = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  OptimizerConfig optimizer{};

  /// Spec with the per-check default tolerance.
  static TrialSpec make(CheckKind check, SystemDims dims, AntiMonotoneFunction f, int n_trials, std::uint64_t seed);

  /// Throws InvalidInput unless n_trials >= 1, tolerance > 0 and the dims fit
  /// the check.
  void validate() const;
};

struct NamedMatrix {
  std::string name;
  ComplexMatrix matrix;
  std::optional<SystemDims> dims;
};

struct CheckReport {
  std::string name;  ///< "<check>/<f>/<dims>"
  CheckKind check = CheckKind::DpiPartialTrace;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int inconclusive = 0;
  double tolerance = 0.0;
  double worst_margin = 0.0;
  int worst_trial = -1;
  std::vector<NamedMatrix> witness;  ///< inputs of the worst trial

  /// No failures and at most 2% inconclusive trials.
  bool passed() const;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;

  bool passed() const;
};

inline constexpr double kMaxInconclusiveFraction = 0.02;

CheckReport run_trials(const TrialSpec& spec);
SuiteReport run_suite(const std::vector<TrialSpec>& specs, std::uint64_t seed = 0);

/// Every check over the builtin generators on qubit pairs, `n_trials` each.
/// Seeds are derived from `seed`.
std::vector<TrialSpec> default_suite(std::uint64_t seed, int n_trials = 100);

}  // namespace qfdiv
