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
#include <string_view>

namespace qfdiv {

/// Compiles a scalar expression in the variable `x`.
///
/// Grammar: numbers, `x`, `pi`, `e`, the binary operators + - * / ^ (right
/// associative, binding tighter than unary minus), parentheses, and the
/// functions log, exp, sqrt, abs and pow(a, b). Throws InvalidInput with the
/// offending position on malformed input.
std::function<double(double)> parse_expression(std::string_view text);

}  // namespace qfdiv
