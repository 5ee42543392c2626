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
//
// Exact scalars. BigInt is GMP's mpz_class; Rational wraps mpq_class and
// keeps it canonical (lowest terms, positive denominator) at all times.

#ifndef INVFORGE_ARITH_HPP_
#define INVFORGE_ARITH_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace invforge {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT
  // Unevaluated integer expressions such as a * b.
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& value) : q_(BigInt(value)) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p", "-p", "p/q" with optional leading sign; q must be nonzero.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // "p/q", with "/q" omitted when q == 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  Rational pow(long exponent) const;
  Rational abs() const;

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(long n);

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

// Rising factorial a (a+1) ... (a+i-1); 1 when i == 0.
Rational pochhammer(const Rational& a, long i);

// (-1)^k as a small integer.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace invforge

#endif  // INVFORGE_ARITH_HPP_
