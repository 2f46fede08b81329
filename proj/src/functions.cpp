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

#include "qfdiv/functions.hpp"

#include <cmath>
#include <sstream>

#include "qfdiv/errors.hpp"

namespace qfdiv {

namespace {

std::string with_beta(const char* family, double beta) {
  std::ostringstream os;
  os.precision(17);
  os << family << "(beta=" << beta << ")";
  return os.str();
}

}  // namespace

double sandwiched_exponent(double alpha) { return (1.0 - alpha) / alpha; }

AntiMonotoneFunction AntiMonotoneFunction::neg_log() {
  return AntiMonotoneFunction(FunctionTag::NegLog, 0.0, "neg-log", true);
}

AntiMonotoneFunction AntiMonotoneFunction::neg_power(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidInput("neg-power: beta must lie in (0, 1]");
  return AntiMonotoneFunction(FunctionTag::NegPower, beta, with_beta("neg-power", beta), true);
}

AntiMonotoneFunction AntiMonotoneFunction::power(double beta) {
  if (!(beta >= -1.0 && beta < 0.0)) throw InvalidInput("power: beta must lie in [-1, 0)");
  return AntiMonotoneFunction(FunctionTag::Power, beta, with_beta("power", beta), true);
}

AntiMonotoneFunction AntiMonotoneFunction::sandwiched(double alpha) {
  if (alpha >= 0.5 && alpha < 1.0) return neg_power(sandwiched_exponent(alpha));
  if (alpha > 1.0 && std::isfinite(alpha)) return power(sandwiched_exponent(alpha));
  throw InvalidInput("sandwiched generator: alpha must lie in [1/2, 1) or (1, inf)");
}

AntiMonotoneFunction AntiMonotoneFunction::custom(std::string name, std::function<double(double)> f,
                                                  bool operator_anti_monotone) {
  if (!f) throw InvalidInput("custom function: empty evaluator");
  AntiMonotoneFunction out(FunctionTag::Custom, 0.0, std::move(name), operator_anti_monotone);
  out.custom_ = std::move(f);
  return out;
}

double AntiMonotoneFunction::operator()(double x) const {
  switch (tag_) {
    case FunctionTag::NegLog:
      return -std::log(x);
    case FunctionTag::NegPower:
      return -std::pow(x, beta_);
    case FunctionTag::Power:
      return std::pow(x, beta_);
    case FunctionTag::Custom:
      return custom_(x);
  }
  return 0.0;
}

std::optional<ClosedForm> AntiMonotoneFunction::closed_form() const {
  switch (tag_) {
    case FunctionTag::NegLog:
      return ClosedForm{ClosedFormKind::RelativeEntropy};
    case FunctionTag::NegPower:
      return ClosedForm{ClosedFormKind::SandwichedLow, 1.0 / (1.0 + beta_)};
    case FunctionTag::Power:
      // beta = -1 is the alpha = infinity endpoint, which has no closed form here.
      if (beta_ > -1.0) return ClosedForm{ClosedFormKind::SandwichedHigh, 1.0 / (1.0 + beta_)};
      return std::nullopt;
    case FunctionTag::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace qfdiv
