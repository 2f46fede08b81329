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

#include "qfdiv/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "qfdiv/errors.hpp"
#include "qfdiv/random.hpp"

namespace qfdiv {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

// Real coordinates of a general complex d x d matrix B (Re, Im of each entry,
// row-major). The state is
//   floor I + (1 - d floor) B B^dagger / Tr{B B^dagger}.
class TauChart {
 public:
  TauChart(std::size_t d, double floor) : d_(d), floor_(floor), mass_(1.0 - floor * static_cast<double>(d)) {}

  std::size_t size() const { return 2 * d_ * d_; }

  ComplexMatrix factor(const Vec& theta) const {
    ComplexMatrix b(d_, d_);
    for (std::size_t k = 0; k < d_ * d_; ++k) b.entries()[k] = Complex(theta[2 * k], theta[2 * k + 1]);
    return b;
  }

  SpectralDecomposition state(const Vec& theta) const {
    const auto b = factor(theta);
    auto eig = eig_hermitian(HermitianMatrix::hermitian_part(b * b.adjoint()));
    double z = 0.0;
    for (auto& l : eig.eigenvalues) {
      l = std::max(l, 0.0);
      z += l;
    }
    for (auto& l : eig.eigenvalues) l = floor_ + mass_ * (l / z);
    return eig;
  }

  // Coordinates of a state whose eigenvalues all exceed the floor.
  std::optional<Vec> coordinates(const HermitianMatrix& tau) const {
    auto eig = eig_hermitian(tau);
    for (auto& l : eig.eigenvalues) {
      l = (l - floor_) / mass_;
      if (!(l > 0.0)) return std::nullopt;
      l = std::sqrt(l);
    }
    const auto b = eig.reconstruct();
    Vec theta(size());
    for (std::size_t k = 0; k < d_ * d_; ++k) {
      theta[2 * k] = b.entries()[k].real();
      theta[2 * k + 1] = b.entries()[k].imag();
    }
    return theta;
  }

 private:
  std::size_t d_;
  double floor_;
  double mass_;
};

class GenericAscent {
 public:
  GenericAscent(const HermitianMatrix& x, const HermitianMatrix& y, const AntiMonotoneFunction& f,
                const OptimizerConfig& cfg)
      : kernel_(x, y), f_(f), cfg_(cfg), chart_(x.dim(), cfg.min_eigenvalue_floor) {}

  static constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

  SpectralDecomposition state(const Vec& theta) const { return chart_.state(theta); }

  double value(const Vec& theta) const {
    const double v = kernel_.evaluate(state(theta), f_);
    return std::isfinite(v) ? v : kInfeasible;
  }

  Vec gradient(const Vec& theta, double f0) const {
    const double h_max = chart_.factor(theta).max_abs();
    const double h = 1e-5 * (1.0 + h_max);
    Vec g(theta.size());
    Vec probe = theta;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      probe[i] = theta[i] + h;
      const double up = value(probe);
      probe[i] = theta[i] - h;
      const double down = value(probe);
      probe[i] = theta[i];
      if (up != kInfeasible && down != kInfeasible) {
        g[i] = (up - down) / (2.0 * h);
      } else if (up != kInfeasible) {
        g[i] = (up - f0) / h;
      } else if (down != kInfeasible) {
        g[i] = (f0 - down) / h;
      } else {
        g[i] = 0.0;
      }
    }
    return g;
  }

  const TauChart& chart() const { return chart_; }

 private:
  ObjectiveKernel kernel_;
  const AntiMonotoneFunction& f_;
  const OptimizerConfig& cfg_;
  TauChart chart_;
};

// Inverse-Hessian model of -F, stored dense (n <= 72 at the sizes we target).
class InverseHessian {
 public:
  explicit InverseHessian(std::size_t n) : n_(n), m_(n * n) {}

  void reset(double scale) {
    std::fill(m_.begin(), m_.end(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) m_[i * n_ + i] = scale;
    fresh_ = true;
  }

  Vec apply(const Vec& g) const {
    Vec out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += m_[i * n_ + j] * g[j];
    return out;
  }

  // s: step taken, y: change of the gradient of -F.
  void update(const Vec& s, const Vec& y) {
    const double sy = dot(s, y);
    if (!(sy > 1e-14 * norm2(s) * norm2(y))) return;  // curvature condition fails
    if (fresh_) {
      reset(sy / dot(y, y));
      fresh_ = false;
    }
    const double rho = 1.0 / sy;
    const Vec hy = apply(y);
    const double yhy = dot(y, hy);
    // H+ = H - rho (s hy^T + hy s^T) + (rho^2 yHy + rho) s s^T
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        m_[i * n_ + j] += -rho * (s[i] * hy[j] + hy[i] * s[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
  }

 private:
  std::size_t n_;
  Vec m_;
  bool fresh_ = true;
};

}  // namespace

void OptimizerConfig::validate() const {
  if (max_iterations <= 0) throw InvalidInput("OptimizerConfig: max_iterations must be positive");
  if (!(convergence_tol > 0.0)) throw InvalidInput("OptimizerConfig: convergence_tol must be positive");
  if (!(step_init > 0.0)) throw InvalidInput("OptimizerConfig: step_init must be positive");
  if (!(min_eigenvalue_floor > 0.0)) throw InvalidInput("OptimizerConfig: min_eigenvalue_floor must be positive");
}

std::string_view to_string(Method m) { return m == Method::ClosedForm ? "ClosedForm" : "Iterative"; }

DensityOperator closed_form_tau_neg_log(const HermitianMatrix& x) { return DensityOperator::normalized(x); }

namespace {

HermitianMatrix hoelder_operator(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
  if (x.dim() != y.dim()) throw InvalidInput("hoelder operator: X and Y differ in dimension");
  if (!((alpha >= 0.5 && alpha < 1.0) || (alpha > 1.0 && std::isfinite(alpha)))) {
    throw InvalidInput("closed_form_tau_power: alpha must lie in [1/2, 1) or (1, inf)");
  }
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const auto root_x = matrix_power(x, 0.5);
  const auto y_pow = matrix_power(y, sandwiched_exponent(alpha));
  return HermitianMatrix::hermitian_part(root_x.matrix() * y_pow.matrix() * root_x.matrix());
}

}  // namespace

DensityOperator closed_form_tau_power(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
  const auto a = hoelder_operator(x, y, alpha);
  return DensityOperator::normalized(matrix_power(a, alpha));
}

DivergenceReport optimize_tau_generic(const HermitianMatrix& x, const HermitianMatrix& y,
                                      const AntiMonotoneFunction& f, const OptimizerConfig& cfg) {
  cfg.validate();
  if (x.dim() != y.dim()) throw InvalidInput("optimize_tau_generic: X and Y differ in dimension");
  const GenericAscent ascent(x, y, f, cfg);
  const std::size_t n = ascent.chart().size();

  DivergenceReport report;
  report.method = Method::Iterative;
  report.certified_supremum = f.is_operator_anti_monotone();

  if (cfg.min_eigenvalue_floor * static_cast<double>(x.dim()) >= 1.0) {
    throw InvalidInput("optimize_tau_generic: min_eigenvalue_floor must be below 1/d");
  }

  // Start from X / Tr{X}, or from I/d when that sits at the floor.
  Vec theta = ascent.chart()
                  .coordinates(closed_form_tau_neg_log(x))
                  .value_or(*ascent.chart().coordinates(DensityOperator::maximally_mixed(x.dim())));
  double current = ascent.value(theta);

  if (n == 0) {
    // One-dimensional S: tau = 1 is the only state.
    report.value = current;
    report.witness_tau = DensityOperator::maximally_mixed(1);
    return report;
  }

  CounterRng rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  InverseHessian model(n);
  Vec grad = ascent.gradient(theta, current);
  auto fresh_scale = [&](const Vec& g) { return cfg.step_init / std::max(norm2(g), 1e-300); };
  model.reset(fresh_scale(grad));

  constexpr int kMaxRestarts = 3;
  int restarts = 0;
  bool converged = false;
  double residual = std::numeric_limits<double>::infinity();
  int iteration = 0;
  int steps_since_reset = 0;
  double checkpoint = GenericAscent::kInfeasible;
  double stall_value = GenericAscent::kInfeasible;

  const double first_scale = std::max(1.0, std::abs(current));
  if (norm2(grad) <= cfg.convergence_tol * first_scale) {
    converged = true;
    residual = norm2(grad) / first_scale;
  }

  while (!converged && iteration < cfg.max_iterations) {
    ++iteration;
    const double scale = std::max(1.0, std::abs(current));
    const Vec dir = model.apply(grad);
    const double slope = dot(grad, dir);
    const double predicted_gain = 0.5 * slope;
    residual = predicted_gain / scale;

    double step = 1.0;
    Vec candidate(n);
    double candidate_value = GenericAscent::kInfeasible;
    bool accepted = false;
    while (step >= 1e-12) {
      for (std::size_t i = 0; i < n; ++i) candidate[i] = theta[i] + step * dir[i];
      candidate_value = ascent.value(candidate);
      if (candidate_value != GenericAscent::kInfeasible && candidate_value >= current + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }

    if (!accepted) {
      if (steps_since_reset > 0) {
        model.reset(fresh_scale(grad));
        steps_since_reset = 0;
        continue;
      }
      if (residual <= cfg.convergence_tol || norm2(grad) <= cfg.convergence_tol * scale) {
        converged = true;
        break;
      }
      // Even a steepest-ascent step cannot improve the value: the gradient is
      // at its noise floor, or the iterate sits on a ridge. Kick it a few times.
      if (stall_value == GenericAscent::kInfeasible) stall_value = current;
      if (restarts++ >= kMaxRestarts) {
        residual = (current - stall_value) / scale;
        converged = residual <= cfg.convergence_tol;
        break;
      }
      Vec kicked = theta;
      for (auto& t : kicked) t += 1e-3 * normal(rng);
      const double kicked_value = ascent.value(kicked);
      if (kicked_value >= current) {
        theta = kicked;
        current = kicked_value;
        grad = ascent.gradient(theta, current);
      }
      model.reset(fresh_scale(grad));
      steps_since_reset = 0;
      continue;
    }

    const double gain = candidate_value - current;
    stall_value = GenericAscent::kInfeasible;
    Vec s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = candidate[i] - theta[i];
    const Vec new_grad = ascent.gradient(candidate, candidate_value);
    Vec yv(n);
    for (std::size_t i = 0; i < n; ++i) yv[i] = grad[i] - new_grad[i];
    model.update(s, yv);

    theta = std::move(candidate);
    current = candidate_value;
    grad = new_grad;

    const double new_scale = std::max(1.0, std::abs(current));
    const double next_gain = 0.5 * dot(grad, model.apply(grad)) / new_scale;
    ++steps_since_reset;
    if (gain <= cfg.convergence_tol * new_scale && next_gain <= cfg.convergence_tol) {
      if (checkpoint == GenericAscent::kInfeasible || steps_since_reset >= static_cast<int>(n)) {
        if (current - checkpoint <= cfg.convergence_tol * new_scale) {
          residual = next_gain;
          converged = true;
          break;
        }
        // The model can underestimate what is left on a stiff landscape:
        // rebuild it, give it n steps, and require no progress in between.
        checkpoint = current;
        model.reset(fresh_scale(grad));
        steps_since_reset = 0;
      }
    }
  }

  report.value = current;
  report.iterations = iteration;
  report.residual = residual;
  report.converged = converged;
  const auto tau = ascent.state(theta);
  report.witness_tau = DensityOperator(HermitianMatrix::hermitian_part(tau.reconstruct()));
  return report;
}

DivergenceReport optimized_f_divergence(const HermitianMatrix& x, const HermitianMatrix& y,
                                        const AntiMonotoneFunction& f, const OptimizerConfig& cfg) {
  const auto closed = f.closed_form();
  if (!closed) return optimize_tau_generic(x, y, f, cfg);

  DivergenceReport report;
  report.method = Method::ClosedForm;
  if (closed->kind == ClosedFormKind::RelativeEntropy) {
    report.value = x.trace() * quantum_relative_entropy(x, y);
    report.witness_tau = closed_form_tau_neg_log(x);
    return report;
  }

  const double alpha = closed->alpha;
  const auto a = hoelder_operator(x, y, alpha);
  const double norm = schatten_quasi_norm(a, alpha);
  report.value = closed->kind == ClosedFormKind::SandwichedLow ? -norm : norm;
  // A^alpha can be too ill-conditioned to be a valid invertible state even
  // though the value itself is fine; the witness is then left out.
  try {
    report.witness_tau = DensityOperator::normalized(matrix_power(a, alpha));
  } catch (const DomainViolation&) {
    report.witness_tau.reset();
  }
  return report;
}

}  // namespace qfdiv
