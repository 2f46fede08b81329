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

#include "qfdiv/random.hpp"

#include <cmath>
#include <random>

#include "qfdiv/errors.hpp"
#include "qfdiv/spectral.hpp"

namespace qfdiv {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Two passes of modified Gram-Schmidt over the columns.
ComplexMatrix orthonormalize_columns(ComplexMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < rows; ++i) proj += std::conj(m(i, k)) * m(i, j);
        for (std::size_t i = 0; i < rows; ++i) m(i, j) -= proj * m(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < rows; ++i) norm += std::norm(m(i, j));
      norm = std::sqrt(norm);
      if (norm < 1e-8) throw NumericalFailure("orthonormalize_columns: rank-deficient Gaussian draw");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) /= norm;
    }
  }
  return m;
}

}  // namespace

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ (index + 1) * kGamma);
}

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, CounterRng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im);
  }
  return g;
}

HermitianMatrix random_hermitian(std::size_t d, std::uint64_t seed) {
  CounterRng rng(seed);
  const auto g = random_ginibre(d, d, rng);
  return HermitianMatrix::hermitian_part(g);
}

DensityOperator random_density(std::size_t d, std::uint64_t seed) {
  CounterRng rng(seed);
  for (;;) {
    const auto g = random_ginibre(d, d, rng);
    const auto gg = HermitianMatrix::hermitian_part(g * g.adjoint());
    const auto eig = eig_hermitian(gg);
    if (eig.min_eigenvalue() > 0.0 && eig.max_eigenvalue() / eig.min_eigenvalue() <= kMaxDensityCondition) {
      return DensityOperator(gg.scaled(1.0 / gg.trace()));
    }
  }
}

Isometry random_isometry(std::size_t d_in, std::size_t d_out, std::uint64_t seed) {
  if (d_in == 0 || d_out < d_in) throw InvalidInput("random_isometry: need 0 < d_in <= d_out");
  CounterRng rng(seed);
  return Isometry(orthonormalize_columns(random_ginibre(d_out, d_in, rng)));
}

Isometry random_unitary(std::size_t d, std::uint64_t seed) { return random_isometry(d, d, seed); }

QuantumChannel random_channel(std::size_t d_in, std::size_t d_out, std::size_t n_kraus, std::uint64_t seed) {
  if (d_in == 0 || d_out == 0 || n_kraus == 0) throw InvalidInput("random_channel: dimensions must be positive");
  if (d_out * n_kraus < d_in) throw InvalidInput("random_channel: d_out * n_kraus must be at least d_in");
  CounterRng rng(seed);
  const auto v = orthonormalize_columns(random_ginibre(d_out * n_kraus, d_in, rng));
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_kraus);
  for (std::size_t k = 0; k < n_kraus; ++k) {
    ComplexMatrix block(d_out, d_in);
    for (std::size_t o = 0; o < d_out; ++o)
      for (std::size_t c = 0; c < d_in; ++c) block(o, c) = v(k * d_out + o, c);
    kraus.push_back(std::move(block));
  }
  return QuantumChannel(std::move(kraus));
}

}  // namespace qfdiv
