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

// Petz and optimized f-divergences plus the closed-form Renyi family.
// All logarithms are natural; every value is in nats.

#include <optional>
#include <span>

#include "qfdiv/functions.hpp"
#include "qfdiv/matrix.hpp"
#include "qfdiv/spectral.hpp"
#include "qfdiv/states.hpp"

namespace qfdiv {

/// How <phi^X| f(tau^{-1} (x) Y^T) |phi^X> is evaluated.
enum class EvaluationRoute {
  /// Uses the product eigenbasis of tau^{-1} (x) Y^T: two d x d
  /// eigendecompositions and sum_ij f(y_j / t_i) |(U^dagger X^{1/2} V)_ij|^2.
  Spectral,
  /// Builds the d^2 x d^2 operator, applies f by spectral calculus and
  /// contracts with the purification vector.
  Kronecker,
};

/// Fixed-(X, Y) part of the optimized objective, reused across many tau.
class ObjectiveKernel {
 public:
  ObjectiveKernel(const HermitianMatrix& x, const HermitianMatrix& y);

  std::size_t dim() const noexcept { return root_x_times_vy_.rows(); }

  /// Objective at tau = U diag(t) U^dagger. Eigenvalues must be positive.
  double evaluate(const SpectralDecomposition& tau, const AntiMonotoneFunction& f) const;

 private:
  ComplexMatrix root_x_times_vy_;  // X^{1/2} V_Y
  std::vector<double> y_eigenvalues_;
};

/// Q~_f(X||Y; tau) = <phi^X| f(tau^{-1} (x) Y^T) |phi^X>.
///
/// X, Y and tau must be positive definite (DomainViolation) and Tr{tau} may
/// not exceed one by more than 1e-12 (InvalidInput).
double optimized_objective(const HermitianMatrix& x, const HermitianMatrix& y, const HermitianMatrix& tau,
                           const AntiMonotoneFunction& f, EvaluationRoute route = EvaluationRoute::Spectral);

/// Q_f(X||Y) = <phi^X| f(X^{-1} (x) Y^T) |phi^X>, i.e. the objective at tau = X.
double petz_f_divergence(const HermitianMatrix& x, const HermitianMatrix& y, const AntiMonotoneFunction& f,
                         EvaluationRoute route = EvaluationRoute::Spectral);

/// D(X/Tr{X} || Y).
double quantum_relative_entropy(const HermitianMatrix& x, const HermitianMatrix& y);

/// (1/(a-1)) log Tr{X^a Y^{1-a}} for a in (0, 1) u (1, 2], |a - 1| >= 1e-6.
double petz_renyi(const HermitianMatrix& x, const HermitianMatrix& y, double alpha);

/// ||Y^{(1-a)/2a} X Y^{(1-a)/2a}||_a, the sandwiched quasi-entropy magnitude.
double sandwiched_quasi_norm(const HermitianMatrix& x, const HermitianMatrix& y, double alpha);

/// (a/(a-1)) log ||Y^{(1-a)/2a} X Y^{(1-a)/2a}||_a for a in [1/2, 1) u (1, inf),
/// |a - 1| >= 1e-6.
double sandwiched_renyi(const HermitianMatrix& x, const HermitianMatrix& y, double alpha);

/// Tr{(Y^{1/2} X Y^{1/2})^{1/2}}.
double fidelity(const HermitianMatrix& x, const HermitianMatrix& y);

/// sum_x q(x) f(p(x) / q(x)). Entries must be positive and each vector must
/// sum to one within 1e-12.
double classical_f_divergence(std::span<const double> p, std::span<const double> q,
                              const AntiMonotoneFunction& f);

/// Distance from one inside which the Renyi families refuse to evaluate.
inline constexpr double kRenyiExclusion = 1e-6;

}  // namespace qfdiv
