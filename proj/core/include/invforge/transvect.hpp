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
// Binary forms and the Omega-operator calculus on them.
//
// Omega = d^2/dx0 dy1 - d^2/dx1 dy0. The k-th transvectant of forms A, B of
// degrees a, b is
//
//   (A,B)_k = (a-k)! (b-k)! / (a! b!) * [Omega^k A(x) B(y)]_{y:=x},
//
// a form of degree a+b-2k, identically zero once k > min(a,b).

#ifndef INVFORGE_TRANSVECT_HPP_
#define INVFORGE_TRANSVECT_HPP_

#include <string>
#include <vector>

#include "invforge/poly.hpp"

namespace invforge {

struct VarPair {
  std::string first;
  std::string second;

  std::vector<std::string> as_vector() const { return {first, second}; }
  friend bool operator==(const VarPair&, const VarPair&) = default;
};

inline const VarPair kX{"x0", "x1"};
inline const VarPair kY{"y0", "y1"};

// A polynomial homogeneous of a declared degree in its two variables. Any
// other registry variables act as symbolic coefficients.
class BinaryForm {
 public:
  // Throws DomainError unless `poly` is homogeneous of `degree` in `xpair`.
  BinaryForm(Poly poly, VarPair xpair, unsigned degree);

  static BinaryForm zero(RegistryPtr registry, VarPair xpair, unsigned degree);

  const Poly& poly() const { return poly_; }
  const VarPair& xpair() const { return xpair_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& s, const BinaryForm& f);
  BinaryForm pow(unsigned n) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.xpair_ == b.xpair_ && a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  Poly poly_;
  VarPair xpair_;
  unsigned degree_;
};

// Omega^k P, with Omega^k expanded by the binomial theorem into commuting
// pure derivatives. All four variables must be registered and distinct.
Poly omega_apply(const Poly& p, const VarPair& x, const VarPair& y, unsigned k);

// (sum_l y_l d/dx_l)^times P.
Poly polarize(const Poly& p, const std::vector<std::string>& xvars,
              const std::vector<std::string>& yvars, unsigned times);

// (A,B)_k. Both forms must share a registry and a variable pair; for
// k > min(a,b) the zero form of degree max(a+b-2k, 0) is returned.
BinaryForm transvectant(const BinaryForm& a, const BinaryForm& b, unsigned k);

// Reference route for transvectant: introduces the y pair explicitly and
// goes through omega_apply on A(x) B(y). `y` must be registered.
BinaryForm transvectant_via_omega(const BinaryForm& a, const BinaryForm& b,
                                  unsigned k, const VarPair& y);

// (Omega^{2p} G)|_{y:=x} without any normalising scalar. G must be
// bihomogeneous of equal degree D in x and y; the result has degree
// max(2D - 4p, 0).
BinaryForm pi_p(const Poly& g, const VarPair& x, const VarPair& y, unsigned p);

// b^2 - 4ac for Q = a x0^2 + b x0 x1 + c x1^2, so that disc(x0 x1) = 1.
Poly discriminant(const BinaryForm& q);

// Names prefix0 .. prefix{degree}.
std::vector<std::string> coefficient_names(const std::string& prefix,
                                           unsigned degree);

// sum_i prefix_i x0^{d-i} x1^i; the registry must contain the coefficient
// names as well as the pair.
BinaryForm generic_form(const RegistryPtr& registry, const std::string& prefix,
                        unsigned degree, const VarPair& x = kX);

// c0 x0 + c1 x1 with c0, c1 registry variables.
BinaryForm linear_form(const RegistryPtr& registry, const std::string& c0,
                       const std::string& c1, const VarPair& x = kX);

}  // namespace invforge

#endif  // INVFORGE_TRANSVECT_HPP_
