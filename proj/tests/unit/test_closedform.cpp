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

#include <gtest/gtest.h>

#include "invforge/closedform.hpp"
#include "invforge/errors.hpp"
#include "invforge/transvect.hpp"
#include "oracles.hpp"

namespace invforge {
namespace {

TEST(WSum, Examples) {
  EXPECT_EQ(w_sum(1, 1, 1), Rational(0));
  EXPECT_EQ(w_sum(1, 1, 2), Rational(-1));
  EXPECT_EQ(w_sum(2, 2, 2), Rational(-3, 4));
  EXPECT_EQ(w_sum(1, 1, 5), Rational(0));
}

TEST(WClosed, Examples) {
  EXPECT_EQ(w_closed(1, 1, 1), Rational(-1));
  EXPECT_EQ(w_closed(2, 2, 1), Rational(-3, 4));
  for (long p = 0; p <= 4; ++p) {
    for (long q = 0; q <= 4; ++q) {
      const BigInt f = factorial(p) * factorial(q);
      EXPECT_EQ(w_closed(p, q, 0), Rational(BigInt(1), f * f));
    }
  }
  EXPECT_THROW(w_closed(1, 2, 2), DomainError);
}

TEST(WSum, MatchesClosedFormAndVanishesForOddK) {
  for (long p = 0; p <= 6; ++p) {
    for (long q = 0; q <= 6; ++q) {
      for (long m = 0; m <= std::min(p, q); ++m) {
        EXPECT_EQ(w_sum(p, q, 2 * m), w_closed(p, q, m)) << p << "," << q << "," << m;
      }
      for (long k = 1; k <= 2 * std::min(p, q) + 1; k += 2) {
        EXPECT_EQ(w_sum(p, q, k), Rational(0)) << p << "," << q << "," << k;
      }
    }
  }
}

TEST(N2, Examples) {
  EXPECT_EQ(n2(1, 1, 1), Rational(1, 2));
  EXPECT_EQ(n2(4, 4, 1), Rational(1, 14));
  for (long p = 0; p <= 5; ++p) EXPECT_EQ(n2(p, 3, 0), Rational(1));
  EXPECT_THROW(n2(1, 1, 2), DomainError);
}

TEST(N2, Symmetric) {
  for (long p = 0; p <= 6; ++p) {
    for (long q = 0; q <= 6; ++q) {
      for (long m = 0; m <= std::min(p, q); ++m) EXPECT_EQ(n2(p, q, m), n2(q, p, m));
    }
  }
}

// (x0 x1)^p transvected with (x0 x1)^q, computed from the definition.
TEST(N2, AgreesWithDirectTransvectantOfMonomialPowers) {
  for (unsigned p = 0; p <= 4; ++p) {
    for (unsigned q = 0; q <= 4; ++q) {
      std::vector<Rational> a(2 * p + 1), b(2 * q + 1);
      a[p] = Rational(1);
      b[q] = Rational(1);
      for (unsigned m = 0; m <= std::min(p, q); ++m) {
        const auto c = oracle::transvectant_coeffs(a, b, 2 * m);
        // Q^{p+q-2m} (-1)^m n2 with Q = x0 x1, disc Q = 1.
        EXPECT_EQ(c[p + q - 2 * m], n2(p, q, m) * Rational(sign_power(m)));
      }
    }
  }
}

TEST(PowerClosed, Examples) {
  const auto r = VarRegistry::create({"q0", "q1", "q2", "x0", "x1"});
  const BinaryForm xx(Poly::parse("x0*x1", r), kX, 2);
  EXPECT_EQ(transvectant_power_closed(1, 1, 2, xx).poly(), Poly::constant(r, Rational(-1, 2)));
  EXPECT_TRUE(transvectant_power_closed(3, 3, 1, xx).is_zero());
  const BinaryForm q = generic_form(r, "q", 2);
  const Poly expect = q.poly() * (-discriminant(q)) * n2(2, 1, 1);
  EXPECT_EQ(transvectant_power_closed(2, 1, 2, q).poly(), expect);
  EXPECT_EQ(transvectant(q.pow(2), q, 2).poly(), expect);
}

TEST(F32, Examples) {
  EXPECT_EQ(f32_term(-1, -2, -2, 2, 2), Rational(0));
  EXPECT_EQ(f32_term(-2, -2, -2, 1, 1), Rational(-6));
  EXPECT_EQ(f32_term(0, 5, Rational(1, 3), 7, 2), Rational(1));
  EXPECT_THROW(f32_term(Rational(1, 2), 1, 1, 1, 1), DomainError);
  EXPECT_THROW(f32_term(-2, 1, 1, -1, 1), DomainError);
}

TEST(Gamma, HalfIntegers) {
  EXPECT_EQ(gamma_exact(Rational(5)).coefficient, Rational(24));
  EXPECT_EQ(gamma_exact(Rational(5)).sqrt_pi_power, 0);
  EXPECT_EQ(gamma_exact(Rational(1, 2)).coefficient, Rational(1));
  EXPECT_EQ(gamma_exact(Rational(1, 2)).sqrt_pi_power, 1);
  EXPECT_EQ(gamma_exact(Rational(5, 2)).coefficient, Rational(3, 4));
  EXPECT_THROW(gamma_exact(Rational(0)), DomainError);
  EXPECT_THROW(gamma_exact(Rational(-1, 2)), DomainError);
  EXPECT_THROW(gamma_exact(Rational(1, 3)), DomainError);
}

TEST(Dixon, Examples) {
  EXPECT_EQ(dixon_rhs(-2, -2, -2), Rational(-6));
  EXPECT_EQ(dixon_rhs(0, -3, -4), Rational(1));
  EXPECT_EQ(dixon_rhs(-3, -4, -5), Rational(0));
  EXPECT_EQ(dixon_rhs(-1, -2, -2), Rational(0));
  EXPECT_EQ(dixon_rhs(Rational(-2), Rational(-3, 2), Rational(-3, 2)), Rational(-16));
  EXPECT_EQ(f32_term(-2, Rational(-3, 2), Rational(-3, 2), Rational(1, 2), Rational(1, 2)),
            Rational(-16));
  EXPECT_THROW(dixon_rhs(Rational(1), Rational(0), Rational(0)), DomainError);
}

TEST(Dixon, BothParameterisations) {
  for (long q = 0; q <= 6; ++q) {
    for (long p = 0; p <= q; ++p) {
      for (long k = 0; k <= p; ++k) {
        EXPECT_EQ(f32_term(-k, -p, -q, p - k + 1, q - k + 1), dixon_rhs(-k, -p, -q));
      }
      for (long k = p + 1; k <= 2 * p; ++k) {
        EXPECT_EQ(f32_term(-2 * p + k, -p, -p - q + k, k - p + 1, q - p + 1),
                  dixon_rhs(-2 * p + k, -p, -p - q + k));
      }
    }
  }
}

TEST(J, Examples) {
  for (long s = 0; s <= 8; ++s) {
    EXPECT_EQ(j_sum(s, 0), Rational(factorial(s)));
    EXPECT_EQ(j_closed(s, 0), Rational(factorial(s)));
    EXPECT_EQ(j_sum(s, 1), Rational(factorial(s + 1) * (2 * s + 3)));
  }
  EXPECT_EQ(j_sum(3, 2), j_closed(3, 2));
}

TEST(J, SumEqualsClosedForm) {
  for (long s = 0; s <= 12; ++s) {
    for (long p = 0; p <= 6; ++p) EXPECT_EQ(j_sum(s, p), j_closed(s, p)) << s << "," << p;
  }
}

TEST(N3, Examples) {
  for (long r = 2; r <= 4; ++r) {
    for (long e = 1; e <= 3; ++e) EXPECT_EQ(n3(r, e, 0, 0), Rational(1));
  }
  EXPECT_EQ(n3(2, 1, 0, 1), Rational(0));
  EXPECT_THROW(n3(2, 1, 2, 0), DomainError);
  EXPECT_EQ(n3(2, 1, 1, 1), Rational(40));
  EXPECT_THROW(n3(1, 1, 0, 0), DomainError);
  EXPECT_THROW(n3(2, 1, 2, 2), DomainError);
}

TEST(N3, WitnessIsNonzero) {
  for (long r = 2; r <= 5; ++r) {
    for (long e = 1; e <= 3; ++e) {
      for (long pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
        const long p = 2 * pp <= r * e ? pp : pp - e;
        EXPECT_NE(n3(r, e, pp, p), Rational(0)) << r << "," << e << "," << pp;
      }
    }
  }
}

TEST(N1Closed, Examples) {
  EXPECT_EQ(n1_closed(1, 0), Rational(1));
  EXPECT_EQ(n1_closed(1, 1), Rational(2));
  for (long e = 0; e <= 6; ++e) EXPECT_EQ(n1_closed(e, 0), Rational(1));
  EXPECT_EQ(n1_closed(4, 4), Rational(23224320));
  EXPECT_THROW(n1_closed(2, 3), DomainError);
}

}  // namespace
}  // namespace invforge
