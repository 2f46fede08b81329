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
#include <optional>
#include <string>

namespace qfdiv {

enum class FunctionTag { NegLog, NegPower, Power, Custom };

enum class ClosedFormKind {
  RelativeEntropy,  ///< f = -log, optimal tau = X / Tr{X}
  SandwichedLow,    ///< f = -x^{(1-a)/a}, a in [1/2, 1)
  SandwichedHigh,   ///< f = x^{(1-a)/a}, a in (1, inf)
};

struct ClosedForm {
  ClosedFormKind kind;
  double alpha = 0.0;  ///< unused for RelativeEntropy
};

/// Scalar function on (0, inf) used as the generator of an f-divergence.
///
/// The builtin families are operator anti-monotone by construction:
///   -log x,  -x^beta for beta in (0, 1],  x^beta for beta in [-1, 0).
/// Custom functions carry a caller-supplied flag; nothing here tries to
/// verify operator anti-monotonicity.
class AntiMonotoneFunction {
 public:
  static AntiMonotoneFunction neg_log();
  static AntiMonotoneFunction neg_power(double beta);
  static AntiMonotoneFunction power(double beta);
  /// The generator whose optimized divergence is the sandwiched Renyi
  /// quasi-entropy of order alpha: -x^{(1-a)/a} below one, x^{(1-a)/a} above.
  static AntiMonotoneFunction sandwiched(double alpha);
  static AntiMonotoneFunction custom(std::string name, std::function<double(double)> f,
                                     bool operator_anti_monotone);

  double operator()(double x) const;

  FunctionTag tag() const noexcept { return tag_; }
  /// Exponent for the power families, 0 otherwise.
  double beta() const noexcept { return beta_; }
  const std::string& name() const noexcept { return name_; }
  bool is_operator_anti_monotone() const noexcept { return anti_monotone_; }
  std::optional<ClosedForm> closed_form() const;

 private:
  AntiMonotoneFunction(FunctionTag tag, double beta, std::string name, bool anti_monotone)
      : tag_(tag), beta_(beta), name_(std::move(name)), anti_monotone_(anti_monotone) {}

  FunctionTag tag_;
  double beta_ = 0.0;
  std::string name_;
  bool anti_monotone_ = true;
  std::function<double(double)> custom_;
};

/// (1 - alpha) / alpha
double sandwiched_exponent(double alpha);

}  // namespace qfdiv
