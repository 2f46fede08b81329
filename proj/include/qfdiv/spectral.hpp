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

#include <functional>
#include <vector>

#include "qfdiv/matrix.hpp"

namespace qfdiv {

/// H = U diag(lambda) U^dagger with eigenvalues ascending and the
/// eigenvectors stored as the columns of U.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_eigenvalue() const { return eigenvalues.back(); }
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm drops below
  /// `relative_tolerance * ||H||_F`.
  double relative_tolerance = 1e-14;
};

/// Cyclic complex Jacobi rotations.
///
/// Throws NumericalFailure if the off-diagonal mass is still above tolerance
/// after `max_sweeps` sweeps.
SpectralDecomposition eig_hermitian(const HermitianMatrix& h, const JacobiOptions& opts = {});

using ScalarFunction = std::function<double(double)>;

inline constexpr double kDefaultDomainFloor = 1e-12;

/// U f(diag(lambda)) U^dagger. Every eigenvalue must exceed `domain_floor`,
/// otherwise DomainViolation.
HermitianMatrix matrix_function(const HermitianMatrix& h, const ScalarFunction& f,
                                double domain_floor = kDefaultDomainFloor);
HermitianMatrix matrix_function(const SpectralDecomposition& eig, const ScalarFunction& f,
                                double domain_floor = kDefaultDomainFloor);

/// Spectral power. Non-negative integer exponents accept any Hermitian input;
/// all other exponents need eigenvalues above 1e-12.
HermitianMatrix matrix_power(const HermitianMatrix& h, double p);

HermitianMatrix matrix_log(const HermitianMatrix& h);

/// (sum_i lambda_i^alpha)^(1/alpha) for positive semi-definite z. Eigenvalues
/// in [-1e-12, 0) are clipped to zero; anything lower is a DomainViolation.
double schatten_quasi_norm(const HermitianMatrix& z, double alpha);

/// Relative invertibility threshold: lambda_min > kInvertibilityRatio * lambda_max.
inline constexpr double kInvertibilityRatio = 1e-12;

bool is_positive_definite(const SpectralDecomposition& eig);
bool is_positive_definite(const HermitianMatrix& h);

/// Throws DomainViolation naming `what` unless `h` is positive definite.
void require_positive_definite(const HermitianMatrix& h, const char* what);

/// Tr{a b} for square a, b of equal size, without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1/2) ||a - b||_1.
double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace qfdiv
