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

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qfdiv/divergences.hpp"
#include "qfdiv/errors.hpp"
#include "qfdiv/random.hpp"

using namespace qfdiv;

namespace {

// Frozen scalar oracles (evaluated in double precision from the closed
// expressions in the comments).
constexpr double kKlExample = 0.13081203594113697;          // 0.75 ln 1.5 + 0.25 ln 0.5
constexpr double kRenyi2Example = 0.22314355131420976;      // ln(0.75^2/0.5 + 0.25^2/0.5) = ln 1.25
constexpr double kClassicalNegLogExample = 0.14384103622589045;  // -0.5 ln 1.5 - 0.5 ln 0.5

const std::vector<double> kP = {0.75, 0.25};
const std::vector<double> kQ = {0.5, 0.5};

std::vector<AntiMonotoneFunction> builtin_functions() {
  return {AntiMonotoneFunction::neg_log(),       AntiMonotoneFunction::neg_power(1.0 / 3.0),
          AntiMonotoneFunction::neg_power(0.5),  AntiMonotoneFunction::neg_power(1.0),
          AntiMonotoneFunction::power(-0.5),     AntiMonotoneFunction::power(-1.0)};
}

HermitianMatrix unnormalized(std::size_t d, std::uint64_t seed, double scale) {
  return random_density(d, seed).matrix().scaled(scale);
}

double direct_trace_power_product(const HermitianMatrix& x, double px, const HermitianMatrix& y, double py) {
  return (matrix_power(x, px).matrix() * matrix_power(y, py).matrix()).trace().real();
}

// Tr|X^{1/2} Y^{1/2}| via Eigen's SVD.
double fidelity_oracle(const HermitianMatrix& x, const HermitianMatrix& y) {
  const auto prod = matrix_power(x, 0.5).matrix() * matrix_power(y, 0.5).matrix();
  Eigen::MatrixXcd e(prod.rows(), prod.cols());
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) e(i, j) = prod(i, j);
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(e).singularValues().sum();
}

}  // namespace

TEST_CASE("AntiMonotoneFunction families") {
  CHECK(AntiMonotoneFunction::neg_log()(std::exp(1.0)) == doctest::Approx(-1.0));
  CHECK(AntiMonotoneFunction::neg_power(0.5)(4.0) == doctest::Approx(-2.0));
  CHECK(AntiMonotoneFunction::power(-1.0)(4.0) == doctest::Approx(0.25));

  CHECK_THROWS_AS(AntiMonotoneFunction::neg_power(0.0), InvalidInput);
  CHECK_THROWS_AS(AntiMonotoneFunction::neg_power(1.5), InvalidInput);
  CHECK_THROWS_AS(AntiMonotoneFunction::power(0.0), InvalidInput);
  CHECK_THROWS_AS(AntiMonotoneFunction::power(-1.5), InvalidInput);

  const auto neg_log = AntiMonotoneFunction::neg_log().closed_form();
  REQUIRE(neg_log);
  CHECK(neg_log->kind == ClosedFormKind::RelativeEntropy);

  const auto low = AntiMonotoneFunction::neg_power(1.0 / 3.0).closed_form();
  REQUIRE(low);
  CHECK(low->kind == ClosedFormKind::SandwichedLow);
  CHECK(low->alpha == doctest::Approx(0.75));

  const auto high = AntiMonotoneFunction::power(-0.5).closed_form();
  REQUIRE(high);
  CHECK(high->kind == ClosedFormKind::SandwichedHigh);
  CHECK(high->alpha == doctest::Approx(2.0));

  CHECK_FALSE(AntiMonotoneFunction::power(-1.0).closed_form());
  CHECK_FALSE(AntiMonotoneFunction::custom("sq", [](double x) { return x * x; }, false).closed_form());

  CHECK(AntiMonotoneFunction::sandwiched(0.75).tag() == FunctionTag::NegPower);
  CHECK(AntiMonotoneFunction::sandwiched(3.0).tag() == FunctionTag::Power);
  CHECK_THROWS_AS(AntiMonotoneFunction::sandwiched(0.4), InvalidInput);
  CHECK_THROWS_AS(AntiMonotoneFunction::sandwiched(1.0), InvalidInput);
}

TEST_CASE("classical_f_divergence") {
  const auto neg_log = AntiMonotoneFunction::neg_log();
  CHECK(classical_f_divergence(kP, kP, neg_log) == 0.0);
  CHECK(classical_f_divergence(kP, kQ, neg_log) == doctest::Approx(kClassicalNegLogExample).epsilon(1e-14));
  const std::vector<double> uniform = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(classical_f_divergence(uniform, uniform, AntiMonotoneFunction::neg_power(0.5)) ==
        doctest::Approx(-1.0).epsilon(1e-15));

  const std::vector<double> with_zero = {1.0, 0.0};
  CHECK_THROWS_AS(classical_f_divergence(with_zero, kQ, neg_log), InvalidInput);
  const std::vector<double> not_normalized = {0.6, 0.6};
  CHECK_THROWS_AS(classical_f_divergence(not_normalized, kQ, neg_log), InvalidInput);
  CHECK_THROWS_AS(classical_f_divergence(kP, uniform, neg_log), InvalidInput);
}

TEST_CASE("petz_f_divergence") {
  SUBCASE("-x^beta reduces to -Tr{X^{1-beta} Y^beta}") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto x = unnormalized(2, seed, 1.0);
      const auto y = unnormalized(2, seed + 1000, 1.0);
      for (double beta : {0.25, 0.5, 1.0}) {
        const double expect = -direct_trace_power_product(x, 1.0 - beta, y, beta);
        CHECK(std::abs(petz_f_divergence(x, y, AntiMonotoneFunction::neg_power(beta)) - expect) < 1e-10);
      }
      const double expect_pos = direct_trace_power_product(x, 1.5, y, -0.5);
      CHECK(std::abs(petz_f_divergence(x, y, AntiMonotoneFunction::power(-0.5)) - expect_pos) < 1e-10);
    }
  }
  SUBCASE("identical maximally mixed states under -log") {
    const auto rho = HermitianMatrix::identity(3).scaled(1.0 / 3.0);
    CHECK(std::abs(petz_f_divergence(rho, rho, AntiMonotoneFunction::neg_log())) < 1e-15);
  }
  SUBCASE("commuting inputs match the classical oracle with arguments exchanged") {
    // <phi^X| f(X^{-1} (x) Y^T) |phi^X> = sum_x p(x) f(q(x)/p(x)) for X = diag(p), Y = diag(q).
    const auto x = HermitianMatrix::diagonal(kP);
    const auto y = HermitianMatrix::diagonal(kQ);
    CHECK(std::abs(petz_f_divergence(x, y, AntiMonotoneFunction::neg_log()) - kKlExample) < 1e-12);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      CounterRng rng(seed);
      std::vector<double> p(4), q(4);
      double sp = 0, sq = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        p[i] = 0.05 + static_cast<double>(rng() % 1000) / 1000.0;
        q[i] = 0.05 + static_cast<double>(rng() % 1000) / 1000.0;
        sp += p[i];
        sq += q[i];
      }
      for (std::size_t i = 0; i < 4; ++i) {
        p[i] /= sp;
        q[i] /= sq;
      }
      for (const auto& f : builtin_functions()) {
        const double quantum = petz_f_divergence(HermitianMatrix::diagonal(p), HermitianMatrix::diagonal(q), f);
        CHECK(std::abs(quantum - classical_f_divergence(q, p, f)) < 1e-10);
      }
    }
  }
  SUBCASE("spectral and Kronecker routes agree") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto x = unnormalized(3, seed, 2.0);
      const auto y = unnormalized(3, seed + 50, 0.5);
      for (const auto& f : builtin_functions()) {
        const double spectral = petz_f_divergence(x, y, f, EvaluationRoute::Spectral);
        const double kronecker = petz_f_divergence(x, y, f, EvaluationRoute::Kronecker);
        CHECK(std::abs(spectral - kronecker) < 1e-10 * std::max(1.0, std::abs(kronecker)));
      }
    }
  }
  SUBCASE("non-positive-definite input") {
    const double singular[] = {0.0, 1.0};
    CHECK_THROWS_AS(petz_f_divergence(HermitianMatrix::diagonal(singular), HermitianMatrix::identity(2),
                                      AntiMonotoneFunction::neg_log()),
                    DomainViolation);
  }
}

TEST_CASE("optimized_objective") {
  const auto neg_log = AntiMonotoneFunction::neg_log();

  SUBCASE("tau = X/Tr{X} under -log gives the relative entropy") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto x = random_density(3, seed);
      const auto y = random_density(3, seed + 77);
      const double direct = trace_of_product(x, matrix_log(x)).real() - trace_of_product(x, matrix_log(y)).real();
      CHECK(std::abs(optimized_objective(x, y, x, neg_log) - direct) < 1e-10);
    }
  }
  SUBCASE("identical maximally mixed states") {
    const auto half = HermitianMatrix::identity(2).scaled(0.5);
    CHECK(std::abs(optimized_objective(half, half, half, neg_log)) < 1e-15);
  }
  SUBCASE("power generator reduces to a trace against tau^{(a-1)/a}") {
    const double alpha = 0.75;
    const auto f = AntiMonotoneFunction::sandwiched(alpha);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto x = unnormalized(2, seed, 1.3);
      const auto y = unnormalized(2, seed + 5, 0.8);
      const auto tau = random_density(2, seed + 9);
      const auto root_x = matrix_power(x, 0.5).matrix();
      const auto direct = -(root_x * matrix_power(y, (1 - alpha) / alpha).matrix() * root_x *
                            matrix_power(tau, (alpha - 1) / alpha).matrix())
                               .trace()
                               .real();
      CHECK(std::abs(optimized_objective(x, y, tau, f) - direct) < 1e-10);
    }
  }
  SUBCASE("spectral and Kronecker routes agree for sub-normalized tau") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto x = unnormalized(2, seed, 1.0);
      const auto y = unnormalized(2, seed + 3, 1.0);
      const auto tau = random_density(2, seed + 6).matrix().scaled(0.6);
      for (const auto& f : builtin_functions()) {
        const double a = optimized_objective(x, y, tau, f, EvaluationRoute::Spectral);
        const double b = optimized_objective(x, y, tau, f, EvaluationRoute::Kronecker);
        CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
      }
    }
  }
  SUBCASE("at tau = X it is exactly the Petz divergence") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto x = random_density(3, seed);
      const auto y = random_density(3, seed + 1);
      for (const auto& f : builtin_functions()) CHECK(optimized_objective(x, y, x, f) == petz_f_divergence(x, y, f));
    }
  }
  SUBCASE("shrinking tau never increases the objective") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto x = random_density(2, seed);
      const auto y = random_density(2, seed + 1);
      const auto tau = random_density(2, seed + 2);
      for (const auto& f : builtin_functions()) {
        const double full = optimized_objective(x, y, tau, f);
        for (double c : {0.1, 0.5, 0.9}) CHECK(optimized_objective(x, y, tau.matrix().scaled(c), f) <= full + 1e-10);
      }
    }
  }
  SUBCASE("errors") {
    const auto x = random_density(2, 1);
    CHECK_THROWS_AS(optimized_objective(x, x, HermitianMatrix::identity(2), neg_log), InvalidInput);
    const double singular[] = {0.0, 1.0};
    CHECK_THROWS_AS(optimized_objective(x, x, HermitianMatrix::diagonal(singular), neg_log), DomainViolation);
    CHECK_THROWS_AS(optimized_objective(x, random_density(3, 1), x, neg_log), InvalidInput);
  }
}

TEST_CASE("quantum_relative_entropy") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto rho = random_density(3, seed);
    CHECK(std::abs(quantum_relative_entropy(rho, rho)) < 1e-12);
  }
  CHECK(std::abs(quantum_relative_entropy(HermitianMatrix::diagonal(kP), HermitianMatrix::diagonal(kQ)) -
                 kKlExample) < 1e-12);
  // Normalization of X happens internally.
  CHECK(std::abs(quantum_relative_entropy(HermitianMatrix::diagonal(kP).scaled(4.0), HermitianMatrix::diagonal(kQ)) -
                 kKlExample) < 1e-12);

  SUBCASE("unitary invariance") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto x = random_density(3, seed);
      const auto y = random_density(3, seed + 40);
      const auto u = random_unitary(3, seed + 80).matrix();
      const auto ux = HermitianMatrix::hermitian_part(u * x.matrix().matrix() * u.adjoint());
      const auto uy = HermitianMatrix::hermitian_part(u * y.matrix().matrix() * u.adjoint());
      CHECK(std::abs(quantum_relative_entropy(ux, uy) - quantum_relative_entropy(x, y)) < 1e-10);
    }
  }
  SUBCASE("additivity under tensor products") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto r1 = random_density(2, seed);
      const auto r2 = random_density(3, seed + 1);
      const auto s1 = random_density(2, seed + 2);
      const auto s2 = random_density(3, seed + 3);
      const double joint = quantum_relative_entropy(HermitianMatrix::hermitian_part(kron(r1, r2)),
                                                    HermitianMatrix::hermitian_part(kron(s1, s2)));
      CHECK(std::abs(joint - quantum_relative_entropy(r1, s1) - quantum_relative_entropy(r2, s2)) < 1e-9);
    }
  }
}

TEST_CASE("petz_renyi") {
  const auto rho = random_density(3, 5);
  for (double alpha : {0.1, 0.5, 0.9, 1.5, 2.0}) CHECK(std::abs(petz_renyi(rho, rho, alpha)) < 1e-12);

  CHECK(std::abs(petz_renyi(HermitianMatrix::diagonal(kP), HermitianMatrix::diagonal(kQ), 2.0) - kRenyi2Example) <
        1e-12);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto x = random_density(2, seed);
    const auto y = random_density(2, seed + 9);
    for (double alpha : {0.25, 0.5, 0.8}) {
      const double q = -petz_f_divergence(x, y, AntiMonotoneFunction::neg_power(1.0 - alpha));
      CHECK(std::abs(std::exp((alpha - 1.0) * petz_renyi(x, y, alpha)) - q) < 1e-10);
    }
  }

  CHECK_THROWS_AS(petz_renyi(rho, rho, 1.0), InvalidInput);
  CHECK_THROWS_AS(petz_renyi(rho, rho, 1.0 + 1e-7), InvalidInput);
  CHECK_THROWS_AS(petz_renyi(rho, rho, 0.0), InvalidInput);
  CHECK_THROWS_AS(petz_renyi(rho, rho, 2.5), InvalidInput);
}

TEST_CASE("sandwiched_renyi") {
  const auto rho = random_density(3, 6);
  for (double alpha : {0.5, 0.75, 1.5, 2.0, 7.0}) CHECK(std::abs(sandwiched_renyi(rho, rho, alpha)) < 1e-12);

  SUBCASE("alpha = 1/2 is -2 ln F with an SVD fidelity oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto x = random_density(2, seed);
      const auto y = random_density(2, seed + 3);
      CHECK(std::abs(sandwiched_renyi(x, y, 0.5) + 2.0 * std::log(fidelity_oracle(x, y))) < 1e-10);
    }
  }
  SUBCASE("commuting inputs give the classical Renyi value") {
    const auto x = HermitianMatrix::diagonal(kP);
    const auto y = HermitianMatrix::diagonal(kQ);
    CHECK(std::abs(sandwiched_renyi(x, y, 2.0) - kRenyi2Example) < 1e-12);
    for (double alpha : {0.5, 0.7, 1.3, 2.0}) CHECK(std::abs(sandwiched_renyi(x, y, alpha) - petz_renyi(x, y, alpha)) < 1e-12);
  }
  SUBCASE("non-decreasing in alpha") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto x = random_density(2, seed);
      const auto y = random_density(2, seed + 100);
      double previous = -HUGE_VAL;
      for (int k = 5; k <= 30; ++k) {
        if (k == 10) continue;
        const double value = sandwiched_renyi(x, y, k / 10.0);
        CHECK(value >= previous - 1e-9);
        previous = value;
      }
    }
  }
  CHECK_THROWS_AS(sandwiched_renyi(rho, rho, 0.4), InvalidInput);
  CHECK_THROWS_AS(sandwiched_renyi(rho, rho, 1.0), InvalidInput);
  const double singular[] = {0.0, 1.0};
  CHECK_THROWS_AS(sandwiched_renyi(HermitianMatrix::diagonal(singular), HermitianMatrix::identity(2), 2.0),
                  DomainViolation);
}

TEST_CASE("fidelity") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto rho = random_density(3, seed);
    CHECK(std::abs(fidelity(rho, rho) - 1.0) < 1e-10);
    const auto sigma = random_density(3, seed + 20);
    CHECK(std::abs(fidelity(rho, sigma) - fidelity(sigma, rho)) < 1e-10);
    CHECK(std::abs(fidelity(rho, sigma) - fidelity_oracle(rho, sigma)) < 1e-10);
    CHECK(fidelity(rho, sigma) <= 1.0 + 1e-12);
  }
  const double bhattacharyya = std::sqrt(0.75 * 0.5) + std::sqrt(0.25 * 0.5);
  CHECK(std::abs(fidelity(HermitianMatrix::diagonal(kP), HermitianMatrix::diagonal(kQ)) - bhattacharyya) < 1e-14);
}
