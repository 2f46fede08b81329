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

#include "qfdiv/states.hpp"

#include <cmath>
#include <string>

#include "qfdiv/errors.hpp"
#include "qfdiv/spectral.hpp"

namespace qfdiv {

namespace {

void require_bipartite(const HermitianMatrix& m, const SystemDims& dims, const char* op) {
  if (dims.size() != 2 || dims.total() != m.dim()) {
    throw InvalidInput(std::string(op) + ": dims must be bipartite with product equal to " +
                       std::to_string(m.dim()));
  }
}

// Pieces shared by the recovery channel and its isometric extension.
struct RecoveryFactors {
  HermitianMatrix sqrt_ab;
  HermitianMatrix inv_sqrt_a;
};

RecoveryFactors recovery_factors(const HermitianMatrix& x_ab, const SystemDims& dims, const char* op) {
  require_bipartite(x_ab, dims, op);
  require_positive_definite(x_ab, "X_AB");
  const auto x_a = HermitianMatrix::hermitian_part(partial_trace(x_ab, dims, 0));
  require_positive_definite(x_a, "X_A");
  return {matrix_power(x_ab, 0.5), matrix_power(x_a, -0.5)};
}

}  // namespace

// --- DensityOperator ---

DensityOperator::DensityOperator(HermitianMatrix m) : m_(std::move(m)) {
  require_positive_definite(m_, "density operator");
  if (std::abs(m_.trace() - 1.0) > 1e-12) {
    throw InvalidInput("density operator: trace " + std::to_string(m_.trace()) + " is not one");
  }
}

DensityOperator DensityOperator::normalized(const HermitianMatrix& m) {
  require_positive_definite(m, "operator to normalize");
  return DensityOperator(m.scaled(1.0 / m.trace()));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t d) {
  return DensityOperator(HermitianMatrix::identity(d).scaled(1.0 / static_cast<double>(d)));
}

// --- PureVector ---

double PureVector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : amplitudes) s += std::norm(z);
  return s;
}

ComplexMatrix PureVector::outer_product() const {
  const std::size_t n = amplitudes.size();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return out;
}

ComplexMatrix PureVector::as_column() const { return ComplexMatrix(amplitudes.size(), 1, amplitudes); }

Complex inner_product(const PureVector& a, const PureVector& b) {
  if (a.dim() != b.dim()) throw InvalidInput("inner_product: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

PureVector apply(const ComplexMatrix& m, const PureVector& v) {
  if (m.cols() != v.dim()) throw InvalidInput("apply: dimension mismatch");
  PureVector out{std::vector<Complex>(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v.amplitudes[j];
    out.amplitudes[i] = s;
  }
  return out;
}

PureVector gamma_vector(std::size_t d) {
  if (d == 0) throw InvalidInput("gamma_vector: dimension must be positive");
  PureVector g{std::vector<Complex>(d * d)};
  for (std::size_t i = 0; i < d; ++i) g.amplitudes[i * d + i] = 1.0;
  return g;
}

PureVector purification(const HermitianMatrix& x) {
  require_positive_definite(x, "purified operator");
  const auto root = matrix_power(x, 0.5);
  // (X^{1/2} (x) I) sum_i |i>|i> has amplitude X^{1/2}[s, s^] at s * d + s^.
  const std::size_t d = x.dim();
  PureVector out{std::vector<Complex>(d * d)};
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) out.amplitudes[s * d + t] = root(s, t);
  return out;
}

// --- Isometry / QuantumChannel ---

Isometry::Isometry(ComplexMatrix v) : v_(std::move(v)) {
  if (v_.rows() < v_.cols() || v_.cols() == 0) throw InvalidInput("Isometry: need rows >= cols > 0");
  const double err = max_abs_diff(v_.adjoint() * v_, ComplexMatrix::identity(v_.cols()));
  if (err > kChannelTolerance) {
    throw InvalidInput("Isometry: V^dagger V deviates from identity by " + std::to_string(err));
  }
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvalidInput("QuantumChannel: at least one Kraus operator required");
  out_ = kraus_.front().rows();
  in_ = kraus_.front().cols();
  if (in_ == 0 || out_ == 0) throw InvalidInput("QuantumChannel: empty Kraus operator");
  ComplexMatrix sum(in_, in_);
  for (const auto& k : kraus_) {
    if (k.rows() != out_ || k.cols() != in_) {
      throw InvalidInput("QuantumChannel: Kraus operators must all be " + std::to_string(out_) + "x" +
                         std::to_string(in_));
    }
    sum += k.adjoint() * k;
  }
  const double err = max_abs_diff(sum, ComplexMatrix::identity(in_));
  if (err > kChannelTolerance) {
    throw InvalidInput("QuantumChannel: sum K^dagger K deviates from identity by " + std::to_string(err));
  }
}

QuantumChannel QuantumChannel::identity(std::size_t d) { return QuantumChannel({ComplexMatrix::identity(d)}); }

QuantumChannel QuantumChannel::completely_depolarizing(std::size_t d) {
  // K_{ij} = |i><j| / sqrt(d).
  std::vector<ComplexMatrix> kraus;
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix k(d, d);
      k(i, j) = w;
      kraus.push_back(std::move(k));
    }
  return QuantumChannel(std::move(kraus));
}

HermitianMatrix apply_channel(const QuantumChannel& ch, const HermitianMatrix& x) {
  if (x.dim() != ch.input_dim()) {
    throw InvalidInput("apply_channel: operand dimension " + std::to_string(x.dim()) +
                       " does not match channel input " + std::to_string(ch.input_dim()));
  }
  ComplexMatrix out(ch.output_dim(), ch.output_dim());
  for (const auto& k : ch.kraus_ops()) out += k * x.matrix() * k.adjoint();
  return HermitianMatrix::hermitian_part(out);
}

Isometry stinespring_isometry(const QuantumChannel& ch) {
  const std::size_t n = ch.kraus_ops().size();
  const std::size_t out = ch.output_dim();
  ComplexMatrix v(out * n, ch.input_dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& k = ch.kraus_ops()[i];
    for (std::size_t o = 0; o < out; ++o)
      for (std::size_t c = 0; c < ch.input_dim(); ++c) v(o * n + i, c) = k(o, c);
  }
  return Isometry(std::move(v));
}

HermitianMatrix apply_dilation(const Isometry& v, const HermitianMatrix& x, std::size_t env_dim) {
  if (x.dim() != v.input_dim()) throw InvalidInput("apply_dilation: dimension mismatch");
  if (env_dim == 0 || v.output_dim() % env_dim != 0) throw InvalidInput("apply_dilation: bad environment dimension");
  const auto& m = v.matrix();
  const auto joint = m * x.matrix() * m.adjoint();
  return HermitianMatrix::hermitian_part(partial_trace(joint, {v.output_dim() / env_dim, env_dim}, 0));
}

QuantumChannel petz_recovery_channel(const HermitianMatrix& x_ab, const SystemDims& dims) {
  const auto [sqrt_ab, inv_sqrt_a] = recovery_factors(x_ab, dims, "petz_recovery_channel");
  const std::size_t da = dims[0];
  const std::size_t db = dims[1];
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(db);
  for (std::size_t j = 0; j < db; ++j) {
    // X_A^{-1/2} (x) |j>_B
    ComplexMatrix embed(da * db, da);
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t c = 0; c < da; ++c) embed(a * db + j, c) = inv_sqrt_a(a, c);
    kraus.push_back(sqrt_ab.matrix() * embed);
  }
  return QuantumChannel(std::move(kraus));
}

Isometry petz_recovery_isometry(const HermitianMatrix& x_ab, const SystemDims& dims) {
  const auto [sqrt_ab, inv_sqrt_a] = recovery_factors(x_ab, dims, "petz_recovery_isometry");
  const std::size_t da = dims[0];
  const std::size_t db = dims[1];
  const auto m = sqrt_ab.matrix() * kron(inv_sqrt_a.matrix(), ComplexMatrix::identity(db));

  // V[(a', b', a^', b^'), (a, a^)] = delta(a^', a^) M[(a', b'), (a, b^')].
  ComplexMatrix v(da * db * da * db, da * da);
  for (std::size_t a2 = 0; a2 < da; ++a2)
    for (std::size_t b2 = 0; b2 < db; ++b2)
      for (std::size_t ah = 0; ah < da; ++ah)
        for (std::size_t bh = 0; bh < db; ++bh) {
          const std::size_t row = ((a2 * db + b2) * da + ah) * db + bh;
          for (std::size_t a = 0; a < da; ++a) v(row, a * da + ah) = m(a2 * db + b2, a * db + bh);
        }
  return Isometry(std::move(v));
}

}  // namespace qfdiv
