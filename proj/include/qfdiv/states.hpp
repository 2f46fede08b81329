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

// States, purifications and channels.
//
// Purifications live on S (x) S^ with the composite index s * |S| + s^, so
// for a bipartite S = AB the doubled space is ordered A B A^ B^.

#include <cstddef>
#include <vector>

#include "qfdiv/matrix.hpp"

namespace qfdiv {

/// Positive definite, unit-trace operator.
class DensityOperator {
 public:
  /// Throws DomainViolation if `m` is not positive definite and InvalidInput if
  /// its trace differs from one by more than 1e-12.
  explicit DensityOperator(HermitianMatrix m);

  /// m / Tr{m}; m must be positive definite.
  static DensityOperator normalized(const HermitianMatrix& m);
  static DensityOperator maximally_mixed(std::size_t d);

  std::size_t dim() const noexcept { return m_.dim(); }
  const HermitianMatrix& matrix() const noexcept { return m_; }
  operator const HermitianMatrix&() const noexcept { return m_; }  // NOLINT
  operator const ComplexMatrix&() const noexcept { return m_.matrix(); }  // NOLINT

 private:
  HermitianMatrix m_;
};

/// Vector on a (usually doubled) Hilbert space. Not normalized: the
/// purification of X has squared norm Tr{X}.
struct PureVector {
  std::vector<Complex> amplitudes;

  std::size_t dim() const noexcept { return amplitudes.size(); }
  double norm_squared() const;
  /// |psi><psi|
  ComplexMatrix outer_product() const;
  ComplexMatrix as_column() const;
};

/// Inner product <a|b>.
Complex inner_product(const PureVector& a, const PureVector& b);
PureVector apply(const ComplexMatrix& m, const PureVector& v);

/// sum_i |i>|i> on d^2 amplitudes.
PureVector gamma_vector(std::size_t d);

/// (X^{1/2} (x) I)|Gamma>; X must be positive definite.
PureVector purification(const HermitianMatrix& x);

/// V with V^dagger V = I (rows >= cols), checked to 1e-10.
class Isometry {
 public:
  explicit Isometry(ComplexMatrix v);

  const ComplexMatrix& matrix() const noexcept { return v_; }
  std::size_t input_dim() const noexcept { return v_.cols(); }
  std::size_t output_dim() const noexcept { return v_.rows(); }

 private:
  ComplexMatrix v_;
};

/// Completely positive trace-preserving map in Kraus form.
class QuantumChannel {
 public:
  /// Every operator must be output_dim x input_dim and sum_i K_i^dagger K_i
  /// must equal the identity to 1e-10; InvalidInput otherwise.
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

  static QuantumChannel identity(std::size_t d);
  /// X -> Tr{X} I/d.
  static QuantumChannel completely_depolarizing(std::size_t d);

  std::size_t input_dim() const noexcept { return in_; }
  std::size_t output_dim() const noexcept { return out_; }
  const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return kraus_; }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t in_ = 0;
  std::size_t out_ = 0;
};

inline constexpr double kChannelTolerance = 1e-10;

/// sum_i K_i X K_i^dagger.
HermitianMatrix apply_channel(const QuantumChannel& ch, const HermitianMatrix& x);

/// V = sum_i K_i (x) |i>_E, output ordered (out, E).
Isometry stinespring_isometry(const QuantumChannel& ch);

/// Tr_E{V X V^dagger} for an isometry into out (x) E with |E| = env_dim.
HermitianMatrix apply_dilation(const Isometry& v, const HermitianMatrix& x, std::size_t env_dim);

/// Z_A -> X_AB^{1/2} ([X_A^{-1/2} Z_A X_A^{-1/2}] (x) I_B) X_AB^{1/2}, as a
/// channel from A to AB with Kraus operators X_AB^{1/2}[X_A^{-1/2} (x) |j>_B].
QuantumChannel petz_recovery_channel(const HermitianMatrix& x_ab, const SystemDims& dims);

/// V = X_AB^{1/2} [X_A^{-1/2} (x) I_A^] |Gamma>_{B B^} from A A^ into A B A^ B^.
/// Maps the purification of X_A onto the purification of X_AB.
Isometry petz_recovery_isometry(const HermitianMatrix& x_ab, const SystemDims& dims);

}  // namespace qfdiv
