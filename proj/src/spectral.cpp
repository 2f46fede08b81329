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

#include "qfdiv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qfdiv/errors.hpp"

namespace qfdiv {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary J = [[c, s e], [-s conj(e), c]] acting on
// the (p,q) plane, where a(p,q) = |a(p,q)| e. This is the real symmetric
// Jacobi rotation conjugated by the phase of the pivot.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex e = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpq = s * e;
  const Complex jqp = -s * std::conj(e);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

}  // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const {
  const auto& u = eigenvectors;
  const std::size_t n = u.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * eigenvalues[k] * std::conj(u(j, k));
      out(i, j) = s;
    }
  return out;
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& h, const JacobiOptions& opts) {
  ComplexMatrix a = h.matrix();
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  const double target = opts.relative_tolerance * scale;

  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= target || off == 0.0) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged) {
    throw NumericalFailure("eig_hermitian: Jacobi iteration did not converge in " +
                           std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

HermitianMatrix matrix_function(const SpectralDecomposition& eig, const ScalarFunction& f,
                                double domain_floor) {
  if (eig.min_eigenvalue() <= domain_floor) {
    throw DomainViolation("matrix_function: eigenvalue " + std::to_string(eig.min_eigenvalue()) +
                          " is not above the domain floor; operand is not positive definite");
  }
  SpectralDecomposition mapped{{}, eig.eigenvectors};
  mapped.eigenvalues.reserve(eig.eigenvalues.size());
  for (double l : eig.eigenvalues) mapped.eigenvalues.push_back(f(l));
  return HermitianMatrix::hermitian_part(mapped.reconstruct());
}

HermitianMatrix matrix_function(const HermitianMatrix& h, const ScalarFunction& f, double domain_floor) {
  return matrix_function(eig_hermitian(h), f, domain_floor);
}

HermitianMatrix matrix_power(const HermitianMatrix& h, double p) {
  const auto eig = eig_hermitian(h);
  const bool whole = p >= 0.0 && std::floor(p) == p;
  if (whole) {
    SpectralDecomposition mapped{{}, eig.eigenvectors};
    for (double l : eig.eigenvalues) mapped.eigenvalues.push_back(p == 0.0 ? 1.0 : std::pow(l, p));
    return HermitianMatrix::hermitian_part(mapped.reconstruct());
  }
  return matrix_function(eig, [p](double x) { return std::pow(x, p); });
}

HermitianMatrix matrix_log(const HermitianMatrix& h) {
  return matrix_function(h, [](double x) { return std::log(x); });
}

double schatten_quasi_norm(const HermitianMatrix& z, double alpha) {
  if (!(alpha > 0.0)) throw InvalidInput("schatten_quasi_norm: alpha must be positive");
  const auto eig = eig_hermitian(z);
  const double floor = -1e-12 * std::max(1.0, std::abs(eig.max_eigenvalue()));
  double s = 0.0;
  for (double l : eig.eigenvalues) {
    if (l < floor) {
      throw DomainViolation("schatten_quasi_norm: eigenvalue " + std::to_string(l) +
                            " is negative; operand is not positive semi-definite");
    }
    if (l > 0.0) s += std::pow(l, alpha);
  }
  return std::pow(s, 1.0 / alpha);
}

bool is_positive_definite(const SpectralDecomposition& eig) {
  const double hi = eig.max_eigenvalue();
  return hi > 0.0 && eig.min_eigenvalue() > kInvertibilityRatio * hi;
}

bool is_positive_definite(const HermitianMatrix& h) { return is_positive_definite(eig_hermitian(h)); }

void require_positive_definite(const HermitianMatrix& h, const char* what) {
  const auto eig = eig_hermitian(h);
  if (!is_positive_definite(eig)) {
    throw DomainViolation(std::string(what) + " is not positive definite (eigenvalues in [" +
                          std::to_string(eig.min_eigenvalue()) + ", " +
                          std::to_string(eig.max_eigenvalue()) + "])");
  }
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw InvalidInput("trace_of_product: shape mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
  return s;
}

double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  const auto eig = eig_hermitian(a - b);
  double s = 0.0;
  for (double l : eig.eigenvalues) s += std::abs(l);
  return 0.5 * s;
}

}  // namespace qfdiv
