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

#include "invforge/closedform.hpp"

#include <algorithm>
#include <string>

#include "invforge/errors.hpp"

namespace invforge {
namespace {

std::string args(std::initializer_list<long> values) {
  std::string s = "(";
  bool first = true;
  for (long v : values) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

void require(bool ok, const char* op, std::initializer_list<long> values) {
  if (!ok) throw DomainError(std::string(op) + args(values) + " out of range");
}

Rational inv_factorial_or_zero(long n) {
  if (n < 0) return Rational(0);
  return Rational(BigInt(1), factorial(n));
}

long to_long_integer(const Rational& r, const char* what) {
  if (!r.is_integer()) throw DomainError(std::string(what) + " must be an integer");
  const BigInt n = r.numerator();
  if (!n.fits_slong_p()) throw DomainError(std::string(what) + " too large");
  return n.get_si();
}

}  // namespace

Rational w_sum(long p, long q, long k) {
  require(p >= 0 && q >= 0 && k >= 0, "w_sum", {p, q, k});
  Rational total(0);
  for (long i = std::max(0l, k - p); i <= std::min(k, p); ++i) {
    Rational term = inv_factorial_or_zero(i) * inv_factorial_or_zero(k - i) *
                    inv_factorial_or_zero(p - i) * inv_factorial_or_zero(q - i) *
                    inv_factorial_or_zero(p - k + i) *
                    inv_factorial_or_zero(q - k + i);
    if (i % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

Rational w_closed(long p, long q, long m) {
  require(p >= 0 && q >= 0 && m >= 0 && m <= std::min(p, q), "w_closed",
          {p, q, m});
  Rational v(factorial(p + q - m),
             factorial(p) * factorial(q) * factorial(m) * factorial(p + q - 2 * m) *
                 factorial(p - m) * factorial(q - m));
  return m % 2 == 0 ? v : -v;
}

Rational n2(long p, long q, long m) {
  require(p >= 0 && q >= 0 && m >= 0 && m <= std::min(p, q), "n2", {p, q, m});
  return Rational(factorial(p) * factorial(q) * factorial(2 * m) *
                      factorial(p + q - m) * factorial(2 * p - 2 * m) *
                      factorial(2 * q - 2 * m),
                  factorial(2 * p) * factorial(2 * q) * factorial(m) *
                      factorial(p + q - 2 * m) * factorial(p - m) *
                      factorial(q - m));
}

BinaryForm transvectant_power_closed(long p, long q, long k,
                                     const BinaryForm& quadratic) {
  require(p >= 0 && q >= 0 && k >= 0, "transvectant_power_closed", {p, q, k});
  if (quadratic.degree() != 2) {
    throw DomainError("transvectant_power_closed needs a quadratic form");
  }
  const long degree = std::max(0l, 2 * (p + q) - 2 * k);
  const auto& reg = quadratic.poly().registry();
  if (k % 2 != 0 || k > 2 * std::min(p, q)) {
    return BinaryForm::zero(reg, quadratic.xpair(), static_cast<unsigned>(degree));
  }
  const long m = k / 2;
  Poly minus_disc = -discriminant(quadratic);
  Poly value = quadratic.poly().pow(static_cast<unsigned>(p + q - 2 * m)) *
               minus_disc.pow(static_cast<unsigned>(m));
  value *= n2(p, q, m);
  return BinaryForm(std::move(value), quadratic.xpair(),
                    static_cast<unsigned>(degree));
}

Rational f32_term(const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, const Rational& e) {
  if (!a.is_integer() || a.sign() > 0) {
    throw DomainError("f32_term needs a nonpositive integer upper parameter a");
  }
  const long terms = -to_long_integer(a, "a");
  Rational total(0);
  Rational term(1);  // (a)_i (b)_i (c)_i / (i! (d)_i (e)_i)
  for (long i = 0; i <= terms; ++i) {
    if (i > 0) {
      const Rational shift(i - 1);
      const Rational den = Rational(i) * (d + shift) * (e + shift);
      if (den.is_zero()) {
        throw DomainError("f32_term: zero lower Pochhammer symbol at i=" +
                          std::to_string(i));
      }
      term *= (a + shift) * (b + shift) * (c + shift) / den;
    }
    total += term;
  }
  return total;
}

GammaValue gamma_exact(const Rational& x) {
  if (x.sign() <= 0) {
    throw DomainError("nonpositive Gamma argument " + x.to_string());
  }
  if (x.is_integer()) {
    return {Rational(factorial(to_long_integer(x, "Gamma argument") - 1)), 0};
  }
  const Rational twice = x * Rational(2);
  if (!twice.is_integer()) {
    throw DomainError("Gamma argument " + x.to_string() +
                      " is neither integer nor half-integer");
  }
  // Gamma(n + 1/2) = sqrt(pi) (1/2)_n
  const long n = to_long_integer((twice - Rational(1)) / Rational(2), "Gamma argument");
  return {pochhammer(Rational(1, 2), n), 1};
}

Rational dixon_rhs(const Rational& a, const Rational& b, const Rational& c) {
  if (!a.is_integer() || a.sign() > 0) {
    throw DomainError("dixon_rhs needs a nonpositive integer a");
  }
  // cos(pi a / 2) on integers cycles through 1, 0, -1, 0.
  const long ai = to_long_integer(a, "a");
  const long phase = ((ai % 4) + 4) % 4;
  if (phase == 1 || phase == 3) return Rational(0);
  const int cosine = phase == 0 ? 1 : -1;

  const Rational one(1);
  const Rational half_a = a / Rational(2);
  const Rational numer_args[] = {one - a, one + half_a - b - c, one + a - b,
                                 one + a - c};
  const Rational denom_args[] = {one - half_a, one + a - b - c, one + half_a - b,
                                 one + half_a - c};
  Rational value(cosine);
  int sqrt_pi = 0;
  for (const auto& x : numer_args) {
    GammaValue g = gamma_exact(x);
    value *= g.coefficient;
    sqrt_pi += g.sqrt_pi_power;
  }
  for (const auto& x : denom_args) {
    GammaValue g = gamma_exact(x);
    value /= g.coefficient;
    sqrt_pi -= g.sqrt_pi_power;
  }
  if (sqrt_pi != 0) {
    throw DomainError("dixon_rhs: powers of sqrt(pi) do not cancel");
  }
  return value;
}

Rational j_sum(long s, long p) {
  require(s >= 0 && p >= 0, "j_sum", {s, p});
  Rational total(0);
  for (long beta = 0; beta <= p; ++beta) {
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * p - 2 * beta));
    Rational term(pow2 * factorial(s + 2 * p - beta),
                  factorial(2 * p - 2 * beta) * factorial(beta));
    if (beta % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

Rational j_closed(long s, long p) {
  require(s >= 0 && p >= 0, "j_closed", {s, p});
  return Rational(factorial(s + p)) *
         pochhammer(Rational(2 * s + 3, 2), p) /
         (Rational(factorial(p)) * pochhammer(Rational(1, 2), p));
}

Rational n3(long r, long e, long pprime, long p) {
  require(r >= 2 && e >= 1 && pprime >= 0 && 2 * pprime <= (r + 1) * e &&
              p >= 0 && 2 * p <= r * e,
          "n3", {r, e, pprime, p});
  const long gap = pprime - p;
  const long b_exp = e - pprime + p;
  const long a_exp = r * e - pprime - p;
  if (gap < 0 || b_exp < 0 || a_exp < 0) return Rational(0);
  Rational v(factorial(2 * p) * factorial(2 * pprime) * factorial(r * e - 2 * p) *
                 factorial(e),
             factorial(gap) * factorial(b_exp) * factorial(a_exp) *
                 factorial((r + 1) * e - 2 * pprime));
  v *= j_closed((r + 1) * e - pprime - p, p);
  return gap % 2 == 0 ? v : -v;
}

Rational n1_closed(long e, long p) {
  require(e >= 0 && p >= 0 && p <= e, "n1_closed", {e, p});
  const BigInt f = factorial(2 * e), g = factorial(2 * e - 2 * p);
  return Rational(f * f, g * g) * n2(e, e, p);
}

}  // namespace invforge
