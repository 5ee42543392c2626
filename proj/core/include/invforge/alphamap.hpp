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
// The equivariant map S_r(S_2e C^{n+1}) -> S_2(S_re C^{n+1}) in coordinates.
//
// A tuple of forms F_1..F_r, each in its own copy x^(i) of the n+1
// variables, is sent to
//
//   prod_i (sum_l y^(i)_l d/dx^(i)_l)^e F_i   with x^(i) -> x, y^(i) -> y,
//
// a polynomial of bidegree (re, re), symmetric under x <-> y.
//
// Matrix convention: columns are multisets of r degree-d monomials (the
// symmetric product in S_r(S_d)); rows are unordered pairs {m, m'} of
// degree-re monomials with {m, m'} standing for m(x)m'(y) + m'(x)m(y) when
// m != m' and for m(x)m(y) on the diagonal. Monomials are listed in
// graded-lex order, larger first.

#ifndef INVFORGE_ALPHAMAP_HPP_
#define INVFORGE_ALPHAMAP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "invforge/arith.hpp"
#include "invforge/poly.hpp"

namespace invforge {

inline constexpr std::size_t kDefaultSizeCap = 2'000'000;

// Variable names used by the recipe. Copy i (1-based) of x_l is "x{l}_{i}".
struct AlphaVariables {
  unsigned n = 1;
  unsigned r = 1;
  RegistryPtr registry;
  std::vector<std::vector<std::string>> x_copies;  // [i][l]
  std::vector<std::vector<std::string>> y_copies;  // [i][l]
  std::vector<std::string> x;                      // x0 .. xn
  std::vector<std::string> y;                      // y0 .. yn
};

AlphaVariables alpha_variables(unsigned n, unsigned r);

// forms[i] must be homogeneous of degree 2e in vars.x_copies[i]. The forms
// may live in any registry containing the recipe's names (extra variables
// are treated as symbolic coefficients). Result is in that registry.
Poly alpha_image(const std::vector<Poly>& forms, const AlphaVariables& vars,
                 unsigned e);

class ExactMatrix {
 public:
  ExactMatrix(std::vector<std::string> row_labels,
              std::vector<std::string> col_labels);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
  }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }

  // Text export:
  //   shape <rows> <cols>
  //   rows <label> ...
  //   cols <label> ...
  //   <rows lines of space-separated rationals>
  std::string export_text() const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<Rational> entries_;
};

// All exponent vectors of total degree `degree` in `nvars` variables, in
// graded-lex order (larger first).
std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned degree);

// The matrix of the map for forms of even degree d in n+1 variables.
// Throws DomainError when d is odd, r or n is zero, or rows*cols exceeds
// `size_cap`.
ExactMatrix alpha_matrix(unsigned n, unsigned d, unsigned r,
                         std::size_t size_cap = kDefaultSizeCap);

// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
// integer matrix, pivoting on the smallest nonzero entry in each column.
std::size_t exact_rank(const ExactMatrix& m);

// C(n+m, m): dimension of degree-m forms in n+1 variables.
BigInt sym_dim(unsigned n, unsigned m);
// D(D+1)/2.
BigInt s2_dim(const BigInt& dim);

}  // namespace invforge

#endif  // INVFORGE_ALPHAMAP_HPP_
