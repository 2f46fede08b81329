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

// Dense complex matrices, Hermitian operators and tensor-product bookkeeping.
//
// Storage is row-major. For a bipartite operator on A (x) B the composite
// basis index is i_A * |B| + i_B, which is the convention used by kron() and
// partial_trace() alike.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qfdiv {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-major nested initializer, for tests and small literals.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  /// Entrywise transpose in the computational basis, no conjugation.
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  /// Largest |entry|.
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// max_ij |a_ij - b_ij|; throws InvalidInput on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Standard Kronecker product, (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ordered list of tensor-factor dimensions, e.g. {|A|, |B|}.
class SystemDims {
 public:
  SystemDims() = default;
  SystemDims(std::initializer_list<std::size_t> factors);
  explicit SystemDims(std::vector<std::size_t> factors);

  std::size_t size() const noexcept { return factors_.size(); }
  std::size_t operator[](std::size_t k) const { return factors_.at(k); }
  std::size_t total() const noexcept;
  const std::vector<std::size_t>& factors() const noexcept { return factors_; }

  friend bool operator==(const SystemDims&, const SystemDims&) = default;

 private:
  std::vector<std::size_t> factors_;
};

/// Reduced operator on factor `keep`, tracing out every other factor of `dims`.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SystemDims& dims, std::size_t keep);

/// Square matrix equal to its conjugate transpose.
///
/// Construction from arbitrary data checks Hermiticity against
/// 1e-12 * max(1, max|entry|) and then stores the exact Hermitian part, so
/// downstream spectral code always sees an exactly self-adjoint array.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Validating constructor; throws InvalidInput when `m` is not Hermitian.
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// (m + m^dagger) / 2 without a tolerance check. For operators that are
  /// Hermitian by construction and only carry roundoff asymmetry.
  static HermitianMatrix hermitian_part(const ComplexMatrix& m);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  operator const ComplexMatrix&() const noexcept { return m_; }  // NOLINT
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  HermitianMatrix transpose() const;
  HermitianMatrix scaled(double s) const;

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);

inline constexpr double kHermitianTolerance = 1e-12;

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);

}  // namespace qfdiv
