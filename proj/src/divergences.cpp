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

#include "qfdiv/divergences.hpp"

#include <cmath>
#include <string>

#include "qfdiv/errors.hpp"

namespace qfdiv {

namespace {

void require_same_dim(const HermitianMatrix& x, const HermitianMatrix& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw InvalidInput(std::string(op) + ": X is " + std::to_string(x.dim()) + "-dimensional but Y is " +
                       std::to_string(y.dim()) + "-dimensional");
  }
}

void require_renyi_order(double alpha, double lo, bool lo_open, double hi, const char* op) {
  const bool above_lo = lo_open ? alpha > lo : alpha >= lo;
  if (!std::isfinite(alpha) || !above_lo || alpha > hi) {
    throw InvalidInput(std::string(op) + ": alpha = " + std::to_string(alpha) + " is outside the admissible range");
  }
  if (std::abs(alpha - 1.0) < kRenyiExclusion) {
    throw InvalidInput(std::string(op) + ": alpha within 1e-6 of 1 is excluded; use the relative entropy");
  }
}

double kronecker_objective(const HermitianMatrix& x, const HermitianMatrix& y, const HermitianMatrix& tau,
                           const AntiMonotoneFunction& f) {
  const auto op = HermitianMatrix::hermitian_part(kron(matrix_power(tau, -1.0), y.matrix().transpose()));
  const auto f_op = matrix_function(op, [&f](double v) { return f(v); });
  const auto phi = purification(x);
  return inner_product(phi, apply(f_op.matrix(), phi)).real();
}

}  // namespace

ObjectiveKernel::ObjectiveKernel(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y, "ObjectiveKernel");
  require_positive_definite(x, "X");
  const auto y_eig = eig_hermitian(y);
  if (!is_positive_definite(y_eig)) throw DomainViolation("Y is not positive definite");
  root_x_times_vy_ = matrix_power(x, 0.5).matrix() * y_eig.eigenvectors;
  y_eigenvalues_ = y_eig.eigenvalues;
}

double ObjectiveKernel::evaluate(const SpectralDecomposition& tau, const AntiMonotoneFunction& f) const {
  const std::size_t d = dim();
  if (tau.eigenvalues.size() != d) throw InvalidInput("ObjectiveKernel::evaluate: dimension mismatch");
  if (!(tau.min_eigenvalue() > 0.0)) throw DomainViolation("tau is not positive definite");
  const auto& u = tau.eigenvectors;
  const auto& m = root_x_times_vy_;
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double inv_t = 1.0 / tau.eigenvalues[i];
    for (std::size_t j = 0; j < d; ++j) {
      // (U^dagger X^{1/2} V_Y)_ij
      Complex w = 0.0;
      for (std::size_t k = 0; k < d; ++k) w += std::conj(u(k, i)) * m(k, j);
      total += f(y_eigenvalues_[j] * inv_t) * std::norm(w);
    }
  }
  return total;
}

double optimized_objective(const HermitianMatrix& x, const HermitianMatrix& y, const HermitianMatrix& tau,
                           const AntiMonotoneFunction& f, EvaluationRoute route) {
  require_same_dim(x, y, "optimized_objective");
  require_same_dim(x, tau, "optimized_objective");
  const auto tau_eig = eig_hermitian(tau);
  if (!is_positive_definite(tau_eig)) throw DomainViolation("tau is not positive definite");
  if (tau.trace() > 1.0 + 1e-12) {
    throw InvalidInput("optimized_objective: Tr{tau} = " + std::to_string(tau.trace()) + " exceeds one");
  }
  if (route == EvaluationRoute::Kronecker) {
    require_positive_definite(x, "X");
    require_positive_definite(y, "Y");
    return kronecker_objective(x, y, tau, f);
  }
  return ObjectiveKernel(x, y).evaluate(tau_eig, f);
}

double petz_f_divergence(const HermitianMatrix& x, const HermitianMatrix& y, const AntiMonotoneFunction& f,
                         EvaluationRoute route) {
  require_same_dim(x, y, "petz_f_divergence");
  if (route == EvaluationRoute::Kronecker) {
    require_positive_definite(x, "X");
    require_positive_definite(y, "Y");
    return kronecker_objective(x, y, x, f);
  }
  const ObjectiveKernel kernel(x, y);
  return kernel.evaluate(eig_hermitian(x), f);
}

double quantum_relative_entropy(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y, "quantum_relative_entropy");
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const auto x_bar = x.scaled(1.0 / x.trace());
  double entropy_term = 0.0;
  for (double l : eig_hermitian(x_bar).eigenvalues) entropy_term += l * std::log(l);
  const double cross_term = trace_of_product(x_bar, matrix_log(y)).real();
  return entropy_term - cross_term;
}

double petz_renyi(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
  require_same_dim(x, y, "petz_renyi");
  require_renyi_order(alpha, 0.0, true, 2.0, "petz_renyi");
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const double q = trace_of_product(matrix_power(x, alpha), matrix_power(y, 1.0 - alpha)).real();
  return std::log(q) / (alpha - 1.0);
}

double sandwiched_quasi_norm(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
  require_same_dim(x, y, "sandwiched_quasi_norm");
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const auto side = matrix_power(y, sandwiched_exponent(alpha) / 2.0);
  const auto z = HermitianMatrix::hermitian_part(side.matrix() * x.matrix() * side.matrix());
  return schatten_quasi_norm(z, alpha);
}

double sandwiched_renyi(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
  require_renyi_order(alpha, 0.5, false, HUGE_VAL, "sandwiched_renyi");
  return alpha / (alpha - 1.0) * std::log(sandwiched_quasi_norm(x, y, alpha));
}

double fidelity(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y, "fidelity");
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const auto root_y = matrix_power(y, 0.5);
  const auto inner = HermitianMatrix::hermitian_part(root_y.matrix() * x.matrix() * root_y.matrix());
  double s = 0.0;
  for (double l : eig_hermitian(inner).eigenvalues) s += std::sqrt(std::max(l, 0.0));
  return s;
}

double classical_f_divergence(std::span<const double> p, std::span<const double> q, const AntiMonotoneFunction& f) {
  if (p.size() != q.size() || p.empty()) throw InvalidInput("classical_f_divergence: p and q differ in length");
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0) || !(q[i] > 0.0)) throw InvalidInput("classical_f_divergence: entries must be positive");
    sp += p[i];
    sq += q[i];
  }
  if (std::abs(sp - 1.0) > 1e-12 || std::abs(sq - 1.0) > 1e-12) {
    throw InvalidInput("classical_f_divergence: distributions must sum to one");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += q[i] * f(p[i] / q[i]);
  return total;
}

}  // namespace qfdiv
