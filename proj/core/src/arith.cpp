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

#include "invforge/arith.hpp"

#include <cctype>

#include "invforge/errors.hpp"

namespace invforge {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer " +
                               std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Rational pochhammer(const Rational& a, long i) {
  if (i < 0) throw DomainError("pochhammer with negative length");
  Rational result(1);
  Rational factor = a;
  for (long t = 0; t < i; ++t) {
    result *= factor;
    factor += Rational(1);
  }
  return result;
}

}  // namespace invforge
