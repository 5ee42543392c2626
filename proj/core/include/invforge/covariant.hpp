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
// Cubic covariants of a binary form F of even degree d = 2e:
//
//   U(i,j) = ((F,F)_{2i}, F)_j                  order 3d - 4i - 2j
//   mu(i,j) = (-1)^{i+k} n2(e,e,i) n2(2e-2i,e,k),  j = 2k
//   Phi(i,j,i',j') = mu(i',j') U(i,j) - mu(i,j) U(i',j')   (2i+j = 2i'+j')
//
// The index range (i,j) is 0 <= i <= e, 0 <= j <= min(d, 2d-4i).

#ifndef INVFORGE_COVARIANT_HPP_
#define INVFORGE_COVARIANT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invforge/arith.hpp"
#include "invforge/transvect.hpp"

namespace invforge {

bool in_cubic_range(unsigned d, unsigned i, unsigned j);

struct CovariantExpr {
  enum class Kind { kU, kPhi };

  Kind kind = Kind::kU;
  unsigned d = 0;
  unsigned i = 0, j = 0;
  unsigned i2 = 0, j2 = 0;  // second pair, Phi only

  static CovariantExpr u(unsigned d, unsigned i, unsigned j);
  // Throws DomainError unless the pairs satisfy the Phi constraints.
  static CovariantExpr phi(unsigned d, unsigned i, unsigned j, unsigned i2,
                           unsigned j2);
  // "U(1,1)" or "Phi(0,6,1,4)", any whitespace ignored.
  static CovariantExpr parse(std::string_view name, unsigned d);

  std::string name() const;
  // 3d - 4i - 2j, clamped at zero.
  unsigned order() const;

  friend bool operator==(const CovariantExpr&, const CovariantExpr&) = default;
};

// Zero form of the expected order when (i,j) is outside the range.
// Throws DomainError when d is odd or F does not have degree d.
BinaryForm u_cov(unsigned d, unsigned i, unsigned j, const BinaryForm& f);

// Throws DomainError for odd j or (i,j) outside the range.
Rational mu(unsigned e, unsigned i, unsigned j);

BinaryForm phi(unsigned d, unsigned i, unsigned j, unsigned i2, unsigned j2,
               const BinaryForm& f);

// Every U(i,j) with j odd (i descending, then j ascending), followed by
// Phi over consecutive even-j pairs of each class 2i+j (classes ascending,
// pairs by ascending i). Requires d even, d >= 4.
std::vector<CovariantExpr> set_S(unsigned d);

// {U(0,3), U(0,5), U(0,7), Phi(0,6,1,4), Phi(0,8,1,6), U(3,3)} for d = 8.
std::vector<CovariantExpr> octavic_preset();

// Evaluates expressions on one form, sharing (F,F)_{2i} and U(i,j).
class CovariantEvaluator {
 public:
  explicit CovariantEvaluator(BinaryForm f);

  const BinaryForm& form() const { return f_; }
  unsigned degree() const { return f_.degree(); }

  const BinaryForm& self_transvectant(unsigned i);
  const BinaryForm& u(unsigned i, unsigned j);
  BinaryForm evaluate(const CovariantExpr& expr);

 private:
  BinaryForm f_;
  std::map<unsigned, BinaryForm> ff_;
  std::map<std::pair<unsigned, unsigned>, BinaryForm> u_;
};

struct MembershipResult {
  bool member = false;
  std::optional<CovariantExpr> witness;
};

// Whether F is the e-th power of a quadratic, decided by the vanishing of
// set_S(d) on F. F needs concrete rational coefficients: every variable of
// its registry other than the form pair makes this throw.
MembershipResult membership(const BinaryForm& f);

}  // namespace invforge

#endif  // INVFORGE_COVARIANT_HPP_
