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
#include <sstream>

#include "invforge/alphamap.hpp"
#include "invforge/errors.hpp"
#include "invforge/transvect.hpp"
#include "oracles.hpp"

namespace invforge {
namespace {

Poly swap_xy(const Poly& p, const AlphaVariables& v) {
  std::map<std::string, Poly> b;
  for (unsigned l = 0; l <= v.n; ++l) {
    b.emplace(v.x[l], Poly::variable(p.registry(), v.y[l]));
    b.emplace(v.y[l], Poly::variable(p.registry(), v.x[l]));
  }
  return p.substitute(b);
}

Poly copy_monomial(const AlphaVariables& v, unsigned i, const std::vector<Exponent>& e) {
  Monomial m(v.registry->size(), 0);
  for (unsigned l = 0; l <= v.n; ++l) m[v.registry->index_of(v.x_copies[i][l])] = e[l];
  return Poly::monomial(v.registry, m, Rational(1));
}

TEST(AlphaImage, SingleFactor) {
  const AlphaVariables v = alpha_variables(1, 1);
  for (unsigned e = 1; e <= 3; ++e) {
    const Poly img = alpha_image({copy_monomial(v, 0, {2 * e, 0})}, v, e);
    Monomial m(v.registry->size(), 0);
    m[v.registry->index_of("x0")] = e;
    m[v.registry->index_of("y0")] = e;
    EXPECT_EQ(img, Poly::monomial(v.registry, m, Rational(factorial(2 * e) / factorial(e))));
  }
}

TEST(AlphaImage, TwoQuadraticsIsSymmetric) {
  const AlphaVariables v = alpha_variables(1, 2);
  const Poly img = alpha_image({copy_monomial(v, 0, {1, 1}), copy_monomial(v, 1, {1, 1})}, v, 1);
  EXPECT_FALSE(img.is_zero());
  EXPECT_TRUE(img.is_homogeneous_in(v.x, 2));
  EXPECT_TRUE(img.is_homogeneous_in(v.y, 2));
  EXPECT_EQ(swap_xy(img, v), img);
}

TEST(AlphaImage, RandomInputsAreSymmetric) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> c(-3, 3);
  for (unsigned n = 1; n <= 2; ++n) {
    const AlphaVariables v = alpha_variables(n, 2);
    const unsigned d = 4;
    std::vector<Poly> forms;
    for (unsigned i = 0; i < 2; ++i) {
      Poly f(v.registry);
      for (const Monomial& m : monomial_basis(n + 1, d)) {
        f += copy_monomial(v, i, std::vector<Exponent>(m.begin(), m.end())) * Rational(c(rng));
      }
      forms.push_back(f);
    }
    const Poly img = alpha_image(forms, v, d / 2);
    EXPECT_EQ(swap_xy(img, v), img);
  }
}

TEST(AlphaImage, DegreeMismatchThrows) {
  const AlphaVariables v = alpha_variables(1, 1);
  EXPECT_THROW(alpha_image({copy_monomial(v, 0, {3, 0})}, v, 1), DomainError);
  EXPECT_THROW(alpha_image({}, v, 1), DomainError);
}

TEST(AlphaMatrix, Shapes) {
  const ExactMatrix a = alpha_matrix(1, 4, 2);
  EXPECT_EQ(a.rows(), 15u);
  EXPECT_EQ(a.cols(), 15u);
  const ExactMatrix b = alpha_matrix(1, 4, 1);
  EXPECT_EQ(b.rows(), 6u);
  EXPECT_EQ(b.cols(), 5u);
  const ExactMatrix c = alpha_matrix(2, 4, 2);
  EXPECT_EQ(c.rows(), 120u);
  EXPECT_EQ(c.cols(), 120u);
}

TEST(AlphaMatrix, Errors) {
  EXPECT_THROW(alpha_matrix(1, 3, 2), DomainError);
  EXPECT_THROW(alpha_matrix(0, 4, 2), DomainError);
  EXPECT_THROW(alpha_matrix(1, 4, 0), DomainError);
  EXPECT_THROW(alpha_matrix(1, 4, 2, 100), DomainError);
  EXPECT_NO_THROW(alpha_matrix(1, 4, 2, 225));
}

TEST(AlphaMatrix, ExportFormat) {
  const ExactMatrix m = alpha_matrix(1, 2, 1);
  std::istringstream in(m.export_text());
  std::string word;
  std::size_t rows = 0, cols = 0;
  in >> word >> rows >> cols;
  EXPECT_EQ(word, "shape");
  EXPECT_EQ(rows, m.rows());
  EXPECT_EQ(cols, m.cols());
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("rows ", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("cols ", 0), 0u);
  std::size_t data_lines = 0;
  while (std::getline(in, line)) ++data_lines;
  EXPECT_EQ(data_lines, m.rows());
}

TEST(ExactRank, Examples) {
  EXPECT_EQ(exact_rank(ExactMatrix::identity(5)), 5u);
  ExactMatrix z({"a", "b"}, {"c", "d", "e"});
  EXPECT_EQ(exact_rank(z), 0u);
  EXPECT_EQ(exact_rank(alpha_matrix(1, 4, 2)), 15u);
}

TEST(ExactRank, AgreesWithGaussianElimination) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-3, 3), size(1, 9), sparse(0, 2);
  for (int t = 0; t < 60; ++t) {
    const int rows = size(rng), cols = size(rng);
    std::vector<std::string> rl, cl;
    for (int i = 0; i < rows; ++i) rl.push_back("r" + std::to_string(i));
    for (int j = 0; j < cols; ++j) cl.push_back("c" + std::to_string(j));
    ExactMatrix m(rl, cl);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (sparse(rng) != 0) m.at(i, j) = Rational(c(rng), 1 + sparse(rng));
      }
    }
    // Duplicate a row now and then to force rank deficiency.
    if (rows > 1 && t % 3 == 0) {
      for (int j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) * Rational(-2, 3);
    }
    EXPECT_EQ(exact_rank(m), oracle::gauss_rank(m));
  }
  for (auto [d, r] : {std::pair{4u, 2u}, {4u, 3u}, {6u, 2u}}) {
    const ExactMatrix m = alpha_matrix(1, d, r);
    EXPECT_EQ(exact_rank(m), oracle::gauss_rank(m));
  }
}

TEST(AlphaMatrix, SurjectiveAtDeskScale) {
  for (unsigned d : {4u, 6u, 8u}) {
    for (unsigned r : {2u, 3u}) {
      const unsigned re = r * d / 2;
      EXPECT_EQ(BigInt(static_cast<unsigned long>(exact_rank(alpha_matrix(1, d, r)))),
                s2_dim(re + 1));
    }
  }
  EXPECT_EQ(exact_rank(alpha_matrix(2, 4, 2)), 120u);
}

// pi_p of the image of (L_1^d, ..., L_r^d) is a fixed multiple of
// (Q^e, Q^e)_{2p} with Q = prod L_i.
TEST(AlphaImage, ProjectionMatchesTransvectant) {
  for (unsigned r = 1; r <= 2; ++r) {
    for (unsigned e = 1; e <= 2; ++e) {
      const unsigned d = 2 * e;
      const AlphaVariables base = alpha_variables(1, r);
      std::vector<std::string> extra;
      for (unsigned i = 1; i <= r; ++i) {
        extra.push_back("c" + std::to_string(i) + "_0");
        extra.push_back("c" + std::to_string(i) + "_1");
      }
      AlphaVariables v = base;
      v.registry = base.registry->extended(extra);
      std::vector<Poly> forms;
      Poly q = Poly::constant(v.registry, Rational(1));
      for (unsigned i = 0; i < r; ++i) {
        const std::string c = "c" + std::to_string(i + 1);
        auto var = [&](const std::string& s) { return Poly::variable(v.registry, s); };
        forms.push_back((var(c + "_0") * var(v.x_copies[i][0]) +
                         var(c + "_1") * var(v.x_copies[i][1])).pow(d));
        q *= var(c + "_0") * var("x0") + var(c + "_1") * var("x1");
      }
      const Poly img = alpha_image(forms, v, e);
      const BinaryForm qe = BinaryForm(q, kX, r).pow(e);
      const unsigned re = r * e;
      for (unsigned p = 0; 2 * p <= re; ++p) {
        const BigInt ratio = factorial(re) / factorial(re - 2 * p);
        BigInt scale = ratio * ratio;
        for (unsigned i = 0; i < r; ++i) scale *= factorial(d) / factorial(e);
        const BinaryForm lhs = pi_p(img, kX, kY, p);
        EXPECT_EQ(lhs.poly(), transvectant(qe, qe, 2 * p).poly() * Rational(scale))
            << "r=" << r << " e=" << e << " p=" << p;
      }
    }
  }
}

TEST(Dimensions, Examples) {
  EXPECT_EQ(sym_dim(1, 4), 5);
  EXPECT_EQ(sym_dim(2, 4), 15);
  EXPECT_EQ(s2_dim(BigInt(5)), 15);
}

}  // namespace
}  // namespace invforge
