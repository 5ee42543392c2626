// Copyright 2026 The invforge Authors
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

#include <cctype>
#include <limits>

#include "invforge/errors.hpp"
#include "invforge/poly.hpp"

namespace invforge {
namespace {

class Parser {
 public:
  Parser(std::string_view text, RegistryPtr registry)
      : text_(text), registry_(std::move(registry)) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Poly result(registry_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Poly t = term();
      if (negative) {
        result -= t;
      } else {
        result += t;
      }
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        throw ParseError(std::string("unexpected character '") + peek() + "'",
                         pos_);
      }
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Poly term() {
    Poly result = Poly::constant(registry_, Rational(1));
    result *= factor();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      result *= factor();
    }
    return result;
  }

  Poly factor() {
    skip_ws();
    if (at_end()) throw ParseError("expected a factor", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(registry_, rational());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (!registry_->contains(name)) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
      Exponent power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = exponent();
      }
      return Poly::variable(registry_, name, power);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Rational rational() {
    const std::size_t start = pos_;
    digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected denominator", pos_);
      }
      digits();
      std::string num, den;
      for (char ch : text_.substr(start, den_start - start)) {
        if (std::isdigit(static_cast<unsigned char>(ch))) num.push_back(ch);
      }
      den = std::string(text_.substr(den_start, pos_ - den_start));
      if (BigInt(den) == 0) throw ParseError("zero denominator", den_start);
      return Rational(BigInt(num), BigInt(den));
    }
    return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
  }

  Exponent exponent() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected exponent", pos_);
    }
    digits();
    BigInt value(std::string(text_.substr(start, pos_ - start)));
    if (value > std::numeric_limits<Exponent>::max()) {
      throw ParseError("exponent exceeds machine word", start);
    }
    return static_cast<Exponent>(value.get_ui());
  }

  void digits() {
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  RegistryPtr registry_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, RegistryPtr registry) {
  return Parser(text, std::move(registry)).parse();
}

}  // namespace invforge
