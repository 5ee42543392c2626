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

#include <random>

#include "invforge/errors.hpp"
#include "invforge/poly.hpp"

namespace invforge {
namespace {

RegistryPtr xy() { return VarRegistry::create({"x0", "x1", "y0", "y1"}); }

Poly P(const std::string& s, const RegistryPtr& r) { return Poly::parse(s, r); }

TEST(Parse, Examples) {
  const auto r = xy();
  const Poly p = P("x0^2 - 2*x0*x1", r);
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.coefficient({2, 0, 0, 0}), Rational(1));
  EXPECT_EQ(p.coefficient({1, 1, 0, 0}), Rational(-2));
  EXPECT_EQ(P("3/2", r), Poly::constant(r, Rational(3, 2)));
  EXPECT_EQ(P("x0*x1 + x1*x0", r), P("2*x0*x1", r));
  EXPECT_EQ(P("  - x0 ^ 2*  x1 ", r).coefficient({2, 1, 0, 0}), Rational(-1));
  EXPECT_EQ(P("2*3/4*x0", r), P("3/2*x0", r));
}

TEST(Parse, ErrorsCarryPositions) {
  const auto r = xy();
  try {
    P("x0 + * x1", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(P("x0 + z", r), DomainError);
  EXPECT_THROW(P("x0^", r), ParseError);
  EXPECT_THROW(P("x0^99999999999", r), DomainError);
  EXPECT_THROW(P("", r), ParseError);
}

TEST(Serialise, GradedLexRoundTrip) {
  const auto r = xy();
  EXPECT_EQ(P("3/2 + x1 - 2*x0*x1 + x0^2", r).to_string(), "x0^2 - 2*x0*x1 + x1 + 3/2");
  EXPECT_EQ(Poly(r).to_string(), "0");
  EXPECT_EQ(P("-x0", r).to_string(), "-x0");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4), ex(0, 3);
  for (int t = 0; t < 30; ++t) {
    Poly p(r);
    for (int k = 0; k < 5; ++k) {
      p += Poly::monomial(r, {Exponent(ex(rng)), Exponent(ex(rng)), Exponent(ex(rng)), 0},
                          Rational(c(rng), 1 + ex(rng)));
    }
    EXPECT_EQ(P(p.to_string(), r), p);
  }
}

TEST(Ring, Examples) {
  const auto r = xy();
  EXPECT_EQ(P("x0 + x1", r).pow(2), P("x0^2 + 2*x0*x1 + x1^2", r));
  EXPECT_TRUE((P("x0 + 5", r) * Poly(r)).is_zero());
  EXPECT_EQ(P("x0*x1", r).pow(3), P("x0^3*x1^3", r));
  EXPECT_TRUE((P("x0", r) - P("x0", r)).is_zero());
  EXPECT_FALSE(P("x0*x1", r).is_zero());
}

TEST(Ring, RegistryMismatchThrows) {
  const auto a = VarRegistry::create({"x0"});
  const auto b = VarRegistry::create({"x1"});
  EXPECT_THROW(Poly::variable(a, "x0") + Poly::variable(b, "x1"), DomainError);
}

TEST(Ring, AxiomsOnRandomPolys) {
  const auto r = xy();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3), ex(0, 2);
  auto rnd = [&] {
    Poly p(r);
    for (int k = 0; k < 4; ++k) {
      p += Poly::monomial(r, {Exponent(ex(rng)), Exponent(ex(rng)), Exponent(ex(rng)),
                              Exponent(ex(rng))},
                          Rational(c(rng)));
    }
    return p;
  };
  for (int t = 0; t < 20; ++t) {
    const Poly a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Differentiate, Examples) {
  const auto r = xy();
  EXPECT_EQ(P("x0^3", r).differentiate("x0"), P("3*x0^2", r));
  EXPECT_TRUE(P("x0^3", r).differentiate("x1").is_zero());
  EXPECT_EQ(P("x0^2*x1^2", r).differentiate("x0").differentiate("x1"), P("4*x0*x1", r));
  EXPECT_EQ(P("x0^5", r).differentiate("x0", 3), P("60*x0^2", r));
  EXPECT_THROW(P("x0", r).differentiate("q"), DomainError);
}

TEST(Differentiate, EulerIdentity) {
  const auto r = xy();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-5, 5);
  for (unsigned m = 0; m <= 6; ++m) {
    Poly p(r);
    for (unsigned i = 0; i <= m; ++i) p += Poly::monomial(r, {m - i, i, 0, 0}, Rational(c(rng)));
    const Poly lhs = P("x0", r) * p.differentiate("x0") + P("x1", r) * p.differentiate("x1");
    EXPECT_EQ(lhs, p * Rational(static_cast<long>(m)));
  }
}

TEST(Substitute, Examples) {
  const auto r = xy();
  EXPECT_EQ(P("x0*x1", r).substitute({{"x0", P("y0", r)}, {"x1", P("y1", r)}}), P("y0*y1", r));
  const Poly p = P("x0^2*y1 - 3*x1", r);
  EXPECT_EQ(p.substitute({{"x0", P("x0", r)}, {"x1", P("x1", r)}}), p);
  EXPECT_TRUE(P("x0 - x1", r).substitute({{"x0", P("y0", r)}, {"x1", P("y0", r)}}).is_zero());
  // Simultaneous, not sequential.
  EXPECT_EQ(P("x0 + 2*x1", r).substitute({{"x0", P("x1", r)}, {"x1", P("x0", r)}}),
            P("x1 + 2*x0", r));
}

TEST(Substitute, IntoSmallerRegistry) {
  const auto r = xy();
  const auto t = VarRegistry::create({"t", "x0"});
  const Poly got = P("x0*y0 + x1", r).substitute(
      {{"x1", Poly::variable(t, "t")}, {"y0", Poly::constant(t, Rational(2))},
       {"y1", Poly::constant(t, Rational(0))}});
  EXPECT_EQ(got, Poly::parse("2*x0 + t", t));
}

TEST(Substitute, CommutesWithDisjointDerivative) {
  const auto r = xy();
  const Poly p = P("x0^3*y0 - 2*x0*x1*y1^2 + y0^2*x1", r);
  const std::map<std::string, Poly> b{{"y0", P("x1 + 2", r)}, {"y1", P("-x1", r)}};
  EXPECT_EQ(p.differentiate("x0").substitute(b), p.substitute(b).differentiate("x0"));
}

TEST(CoefficientOf, Examples) {
  const auto r = VarRegistry::create({"h", "u", "v", "w", "a0", "b0"});
  const Poly p = Poly::parse("h^2*u + h*u", r);
  EXPECT_EQ(p.coefficient_of({{"h", 2}, {"u", 1}}), Poly::constant(r, Rational(1)));
  EXPECT_TRUE(p.coefficient_of({{"h", 3}}).is_zero());
}

TEST(CoefficientOf, PartialAssignment) {
  const auto r = VarRegistry::create({"h", "u", "v", "w", "a0", "b0"});
  const Poly p = Poly::parse("v*a0^2*h + w*b0^2*h", r);
  EXPECT_EQ(p.coefficient_of({{"h", 1}, {"v", 1}, {"w", 0}}), Poly::parse("a0^2", r));
}

TEST(Embed, ByName) {
  const auto small = VarRegistry::create({"x1", "x0"});
  const auto big = xy();
  EXPECT_EQ(Poly::parse("x0 - 3*x1^2", small).embed(big), P("x0 - 3*x1^2", big));
  EXPECT_THROW(Poly::parse("y0", big).embed(small), DomainError);
}

TEST(Registry, RejectsDuplicates) {
  EXPECT_THROW(VarRegistry::create({"a", "a"}), DomainError);
  EXPECT_THROW(VarRegistry::create({""}), DomainError);
  const auto r = VarRegistry::create({"a"})->extended({"b"});
  EXPECT_EQ(r->size(), 2u);
  EXPECT_EQ(r->index_of("b"), 1u);
}

}  // namespace
}  // namespace invforge
