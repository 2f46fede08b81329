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

#include <chrono>
#include <cmath>

#include "doctest.h"
#include "qfdiv/errors.hpp"
#include "qfdiv/optimizer.hpp"
#include "qfdiv/random.hpp"

using namespace qfdiv;

namespace {

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Independent value of sup_tau: ||X^{1/2} Y^{(1-a)/a} X^{1/2}||_a, signed.
double hoelder_value(const HermitianMatrix& x, const HermitianMatrix& y, double alpha) {
  const auto root_x = matrix_power(x, 0.5).matrix();
  const auto a = HermitianMatrix::hermitian_part(root_x * matrix_power(y, (1 - alpha) / alpha).matrix() * root_x);
  double s = 0.0;
  for (double lambda : eig_hermitian(a).eigenvalues) s += std::pow(lambda, alpha);
  const double norm = std::pow(s, 1.0 / alpha);
  return alpha < 1.0 ? -norm : norm;
}

}  // namespace

TEST_CASE("OptimizerConfig validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.convergence_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.min_eigenvalue_floor = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}

TEST_CASE("closed_form_tau_neg_log") {
  CHECK(max_abs_diff(closed_form_tau_neg_log(HermitianMatrix::identity(2)), ComplexMatrix::identity(2) * Complex(0.5)) <
        1e-15);
  const double v[] = {3.0, 1.0};
  const auto tau = closed_form_tau_neg_log(HermitianMatrix::diagonal(v));
  CHECK(tau.matrix()(0, 0).real() == 0.75);
  CHECK(tau.matrix()(1, 1).real() == 0.25);

  const auto f = AntiMonotoneFunction::neg_log();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto x = random_density(3, seed);
    const auto y = random_density(3, seed + 10);
    const double best = optimized_objective(x, y, closed_form_tau_neg_log(x), f);
    for (std::uint64_t k = 0; k < 20; ++k)
      CHECK(optimized_objective(x, y, random_density(3, derive_seed(seed, k)), f) <= best + 1e-12);
  }
}

TEST_CASE("closed_form_tau_power") {
  SUBCASE("commuting qubit example at alpha = 2") {
    const double p[] = {0.75, 0.25};
    const double q[] = {0.5, 0.5};
    const auto x = HermitianMatrix::diagonal(p);
    const auto y = HermitianMatrix::diagonal(q);
    const auto tau = closed_form_tau_power(x, y, 2.0);
    CHECK(std::abs(tau.matrix()(0, 0).real() - 0.9) < 1e-14);
    CHECK(std::abs(tau.matrix()(1, 1).real() - 0.1) < 1e-14);
    const double value = optimized_objective(x, y, tau, AntiMonotoneFunction::sandwiched(2.0));
    CHECK(std::abs(value - std::sqrt(1.25)) < 1e-14);
  }
  SUBCASE("dominates random feasible tau at alpha = 3/4") {
    const auto f = AntiMonotoneFunction::sandwiched(0.75);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto x = random_density(2, seed);
      const auto y = random_density(2, seed + 10);
      const double best = optimized_objective(x, y, closed_form_tau_power(x, y, 0.75), f);
      for (std::uint64_t k = 0; k < 50; ++k)
        CHECK(optimized_objective(x, y, random_density(2, derive_seed(seed + 100, k)), f) <= best + 1e-12);
    }
  }
  SUBCASE("saturates the Hoelder bound") {
    for (double alpha : {0.5, 0.6, 0.75, 0.9, 1.5, 2.0, 3.0}) {
      const auto f = AntiMonotoneFunction::sandwiched(alpha);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto x = random_density(3, seed);
        const auto y = random_density(3, seed + 3);
        const double value = optimized_objective(x, y, closed_form_tau_power(x, y, alpha), f);
        CHECK(relative_gap(value, hoelder_value(x, y, alpha)) < 1e-9);
      }
    }
  }
  SUBCASE("alpha outside the Hoelder range") {
    const auto x = random_density(2, 1);
    CHECK_THROWS_AS(closed_form_tau_power(x, x, 0.4), InvalidInput);
    CHECK_THROWS_AS(closed_form_tau_power(x, x, 1.0), InvalidInput);
  }
}

TEST_CASE("optimized_f_divergence closed forms") {
  const auto x = random_density(3, 3);
  const auto y = random_density(3, 4);

  const auto kl = optimized_f_divergence(x, y, AntiMonotoneFunction::neg_log());
  CHECK(kl.method == Method::ClosedForm);
  CHECK(kl.converged);
  CHECK(kl.certified_supremum);
  CHECK(std::abs(kl.value - quantum_relative_entropy(x, y)) < 1e-12);
  REQUIRE(kl.witness_tau);
  CHECK(max_abs_diff(*kl.witness_tau, x) < 1e-12);

  // Unnormalized X scales the relative-entropy value by Tr{X}.
  const auto scaled = optimized_f_divergence(x.matrix().scaled(2.0), y, AntiMonotoneFunction::neg_log());
  CHECK(std::abs(scaled.value - 2.0 * quantum_relative_entropy(x, y)) < 1e-12);

  const auto s = optimized_f_divergence(x, y, AntiMonotoneFunction::sandwiched(1.5));
  CHECK(s.method == Method::ClosedForm);
  CHECK(std::abs(s.value - hoelder_value(x, y, 1.5)) < 1e-12);
}

TEST_CASE("optimize_tau_generic") {
  SUBCASE("-log recovers X/Tr{X}") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto x = random_density(3, seed);
      const auto y = random_density(3, seed + 7);
      const auto report = optimize_tau_generic(x, y, AntiMonotoneFunction::neg_log());
      CHECK(report.method == Method::Iterative);
      CHECK(report.converged);
      CHECK(relative_gap(report.value, quantum_relative_entropy(x, y)) < 1e-6);
      REQUIRE(report.witness_tau);
      CHECK(trace_distance(*report.witness_tau, x) < 1e-4);
    }
  }
  SUBCASE("identical maximally mixed states") {
    const auto half = HermitianMatrix::identity(2).scaled(0.5);
    const auto report = optimize_tau_generic(half, half, AntiMonotoneFunction::neg_log());
    CHECK(std::abs(report.value) < 1e-12);
    CHECK(report.converged);
  }
  SUBCASE("agrees with the closed form across alpha and dimension") {
    for (std::size_t d : {2, 3, 4}) {
      for (double alpha : {0.5, 0.6, 0.75, 0.9, 1.5, 2.0, 3.0}) {
        const auto f = AntiMonotoneFunction::sandwiched(alpha);
        const auto x = random_density(d, 31 * d);
        const auto y = random_density(d, 31 * d + 1);
        const auto report = optimize_tau_generic(x, y, f);
        CHECK(report.converged);
        CHECK(relative_gap(report.value, optimized_f_divergence(x, y, f).value) < 1e-6);
        REQUIRE(report.witness_tau);
        CHECK(eig_hermitian(*report.witness_tau).min_eigenvalue() >= OptimizerConfig{}.min_eigenvalue_floor);
        CHECK(std::abs(report.witness_tau->matrix().trace() - 1.0) < 1e-12);
      }
    }
  }
  SUBCASE("custom generator matches the built-in one") {
    const auto custom = AntiMonotoneFunction::custom("-sqrt", [](double t) { return -std::sqrt(t); }, true);
    const auto builtin = AntiMonotoneFunction::neg_power(0.5);
    const auto x = random_density(3, 8);
    const auto y = random_density(3, 9);
    const auto a = optimize_tau_generic(x, y, custom);
    const auto b = optimize_tau_generic(x, y, builtin);
    CHECK(std::abs(a.value - b.value) < 1e-12);
    CHECK(a.certified_supremum);
    CHECK(relative_gap(a.value, hoelder_value(x, y, 2.0 / 3.0)) < 1e-6);

    const auto unflagged = AntiMonotoneFunction::custom("-sqrt", [](double t) { return -std::sqrt(t); }, false);
    CHECK_FALSE(optimized_f_divergence(x, y, unflagged).certified_supremum);
  }
  SUBCASE("1/x approaches the largest eigenvalue of X^{1/2} Y^{-1} X^{1/2}") {
    for (std::size_t d : {2, 3, 4, 6}) {
      const auto x = random_density(d, 5 * d);
      const auto y = random_density(d, 5 * d + 1);
      const auto root_x = matrix_power(x, 0.5).matrix();
      const auto a = HermitianMatrix::hermitian_part(root_x * matrix_power(y, -1.0).matrix() * root_x);
      const double top = eig_hermitian(a).max_eigenvalue();
      const auto start = std::chrono::steady_clock::now();
      const auto report = optimized_f_divergence(x, y, AntiMonotoneFunction::power(-1.0));
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      CHECK(report.method == Method::Iterative);
      CHECK(report.value <= top * (1 + 1e-12));
      CHECK(relative_gap(report.value, top) < 1e-6);
      CHECK(seconds < 30.0);
    }
  }
  SUBCASE("seeded runs are reproducible") {
    const auto x = random_density(3, 1);
    const auto y = random_density(3, 2);
    OptimizerConfig cfg;
    cfg.seed = 42;
    const auto a = optimize_tau_generic(x, y, AntiMonotoneFunction::power(-1.0), cfg);
    const auto b = optimize_tau_generic(x, y, AntiMonotoneFunction::power(-1.0), cfg);
    CHECK(a.value == b.value);
    CHECK(a.iterations == b.iterations);
  }
  SUBCASE("tiny budget reports non-convergence") {
    OptimizerConfig cfg;
    cfg.max_iterations = 1;
    const auto report = optimize_tau_generic(random_density(4, 1), random_density(4, 2),
                                             AntiMonotoneFunction::sandwiched(0.75), cfg);
    CHECK_FALSE(report.converged);
    CHECK(report.residual > 0.0);
  }
}

TEST_CASE("objective concavity in tau") {
  for (double alpha : {0.6, 0.75, 2.0}) {
    const auto f = AntiMonotoneFunction::sandwiched(alpha);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto x = random_density(3, seed);
      const auto y = random_density(3, seed + 1);
      const auto t1 = random_density(3, seed + 2);
      const auto t2 = random_density(3, seed + 3);
      const auto mid = (t1.matrix() + t2.matrix()).scaled(0.5);
      const double avg = 0.5 * (optimized_objective(x, y, t1, f) + optimized_objective(x, y, t2, f));
      CHECK(optimized_objective(x, y, mid, f) >= avg - 1e-12);
    }
  }
}
