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

// Seeded random operators. Everything here is a pure function of its seed.

#include <cstdint>

#include "qfdiv/matrix.hpp"
#include "qfdiv/states.hpp"

namespace qfdiv {

/// Counter-based 64-bit generator: output k is splitmix64(key + k * gamma).
/// Models std::uniform_random_bit_generator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Independent sub-seed for stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Matrix of i.i.d. standard complex Gaussians.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, CounterRng& rng);

/// (G + G^dagger)/2 for a Ginibre G.
HermitianMatrix random_hermitian(std::size_t d, std::uint64_t seed);

/// G G^dagger / Tr{G G^dagger}; redraws while the condition number exceeds
/// kMaxDensityCondition.
DensityOperator random_density(std::size_t d, std::uint64_t seed);

inline constexpr double kMaxDensityCondition = 1e6;

/// Orthonormalized Gaussian columns, rows >= cols.
Isometry random_isometry(std::size_t d_in, std::size_t d_out, std::uint64_t seed);
Isometry random_unitary(std::size_t d, std::uint64_t seed);

/// Slices a random (d_out * n_kraus) x d_in isometry into n_kraus Kraus blocks.
QuantumChannel random_channel(std::size_t d_in, std::size_t d_out, std::size_t n_kraus, std::uint64_t seed);

}  // namespace qfdiv
