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

// sup over unit-trace tau > 0 of the optimized objective.

#include <cstdint>
#include <optional>
#include <string_view>

#include "qfdiv/divergences.hpp"
#include "qfdiv/states.hpp"

namespace qfdiv {

struct OptimizerConfig {
  int max_iterations = 500;
  /// Objective-change tolerance, scaled by max(1, |value|).
  double convergence_tol = 1e-9;
  /// Length of the first ascent step in the Hermitian parametrization.
  double step_init = 0.5;
  /// Lower bound on every eigenvalue of the iterate; must be below 1/d.
  double min_eigenvalue_floor = 1e-10;
  /// Drives the random perturbation used when the ascent stalls.
  std::uint64_t seed = 0;

  /// Throws InvalidInput on non-positive tolerances or budgets.
  void validate() const;
};

enum class Method { ClosedForm, Iterative };

std::string_view to_string(Method m);

struct DivergenceReport {
  double value = 0.0;  ///< nats
  std::optional<DensityOperator> witness_tau;
  Method method = Method::ClosedForm;
  int iterations = 0;
  /// Iterative: predicted remaining gain of the quasi-Newton model, relative to
  /// max(1, |value|). Zero for closed forms.
  double residual = 0.0;
  /// False when the iteration budget ran out above tolerance (NonConvergence).
  bool converged = true;
  /// True only for operator anti-monotone f, where a stationary point of the
  /// concave objective is the supremum.
  bool certified_supremum = true;
};

/// X / Tr{X}, the maximizer for f = -log.
DensityOperator closed_form_tau_neg_log(const HermitianMatrix& x);

/// A^a / Tr{A^a} with A = X^{1/2} Y^{(1-a)/a} X^{1/2}, which saturates the
/// (reverse) Hoelder bound for a in [1/2, 1) u (1, inf).
DensityOperator closed_form_tau_power(const HermitianMatrix& x, const HermitianMatrix& y, double alpha);

/// Concave ascent over tau = e I + (1 - d e) B B^dagger / Tr{B B^dagger}, with
/// e the eigenvalue floor and B an unconstrained complex d x d matrix, starting
/// from X / Tr{X}.
///
/// Gradients are central finite differences over the 2 d^2 real coordinates of
/// B; directions come from a BFGS model and every step goes through a halving
/// line search.
DivergenceReport optimize_tau_generic(const HermitianMatrix& x, const HermitianMatrix& y,
                                      const AntiMonotoneFunction& f, const OptimizerConfig& cfg = {});

/// Closed form when f has one, generic ascent otherwise.
DivergenceReport optimized_f_divergence(const HermitianMatrix& x, const HermitianMatrix& y,
                                        const AntiMonotoneFunction& f, const OptimizerConfig& cfg = {});

}  // namespace qfdiv
