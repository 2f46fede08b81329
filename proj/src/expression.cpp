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

#include "qfdiv/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qfdiv/errors.hpp"

namespace qfdiv {

namespace {

using Fn = std::function<double(double)>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Fn parse() {
    Fn f = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("expr: " + what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Fn sum() {
    Fn lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = [a = lhs, b = product()](double x) { return a(x) + b(x); };
      } else if (accept('-')) {
        lhs = [a = lhs, b = product()](double x) { return a(x) - b(x); };
      } else {
        return lhs;
      }
    }
  }

  Fn product() {
    Fn lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = [a = lhs, b = unary()](double x) { return a(x) * b(x); };
      } else if (accept('/')) {
        lhs = [a = lhs, b = unary()](double x) { return a(x) / b(x); };
      } else {
        return lhs;
      }
    }
  }

  Fn unary() {
    if (accept('-')) return [a = unary()](double x) { return -a(x); };
    if (accept('+')) return unary();
    return power();
  }

  Fn power() {
    Fn base = primary();
    if (accept('^')) return [a = base, b = unary()](double x) { return std::pow(a(x), b(x)); };
    return base;
  }

  Fn primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      Fn inner = sum();
      expect(')');
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Fn number() {
    double value = 0.0;
    const auto* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return [value](double) { return value; };
  }

  Fn identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return [](double x) { return x; };
    if (name == "pi") return [](double) { return std::numbers::pi; };
    if (name == "e") return [](double) { return std::numbers::e; };
    if (name == "pow") {
      expect('(');
      Fn a = sum();
      expect(',');
      Fn b = sum();
      expect(')');
      return [a, b](double x) { return std::pow(a(x), b(x)); };
    }
    double (*unary_fn)(double) = nullptr;
    if (name == "log") unary_fn = [](double v) { return std::log(v); };
    if (name == "exp") unary_fn = [](double v) { return std::exp(v); };
    if (name == "sqrt") unary_fn = [](double v) { return std::sqrt(v); };
    if (name == "abs") unary_fn = [](double v) { return std::abs(v); };
    if (unary_fn == nullptr) {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    expect('(');
    Fn arg = sum();
    expect(')');
    return [unary_fn, arg](double x) { return unary_fn(arg(x)); };
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::function<double(double)> parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace qfdiv
