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

#include <stdexcept>
#include <string>

namespace qfdiv {

/// Malformed arguments: wrong dimensions, non-Hermitian data, parameters out of range.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An operand left the domain (0, inf) of a spectral function, i.e. it is not
/// positive definite where it has to be.
class DomainViolation : public std::domain_error {
 public:
  explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

/// An iterative kernel (the Jacobi eigensolver) exhausted its budget.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The generic optimizer ran out of iterations above tolerance. Raised by
/// callers that need a converged value; the best value found is attached.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double best_value) : std::runtime_error(what), best_value_(best_value) {}
  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

}  // namespace qfdiv
