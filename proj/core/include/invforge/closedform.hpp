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
// Closed-form coefficients attached to transvectants of powers of a
// quadratic, and the hypergeometric identities that produce them. Every
// function validates its index ranges before touching a factorial; a
// negative factorial argument is a DomainError, never a pole.

#ifndef INVFORGE_CLOSEDFORM_HPP_
#define INVFORGE_CLOSEDFORM_HPP_

#include "invforge/arith.hpp"
#include "invforge/transvect.hpp"

namespace invforge {

// Van der Waerden's alternating sum
//   W_{p,q,k} = sum_{i=max(0,k-p)}^{min(k,p)}
//               (-1)^i / [i! (k-i)! (p-i)! (q-i)! (p-k+i)! (q-k+i)!].
// Terms containing 1/(negative)! vanish (reciprocal Gamma at a pole).
Rational w_sum(long p, long q, long k);

// (-1)^m (p+q-m)! / [p! q! m! (p+q-2m)! (p-m)! (q-m)!], m <= min(p,q).
Rational w_closed(long p, long q, long m);

// p! q! (2m)! (p+q-m)! (2p-2m)! (2q-2m)! /
//   [(2p)! (2q)! m! (p+q-2m)! (p-m)! (q-m)!],  m <= min(p,q).
Rational n2(long p, long q, long m);

// (Q^p, Q^q)_k in closed form: zero for odd k (or k > 2 min(p,q)), else
// Q^{p+q-2m} (-disc Q)^m n2(p,q,m) with k = 2m.
BinaryForm transvectant_power_closed(long p, long q, long k,
                                     const BinaryForm& quadratic);

// Terminating 3F2(a,b,c; d,e; 1) with a = -K, K >= 0.
Rational f32_term(const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, const Rational& e);

// Dixon's theorem with the cosine-regularised Gamma(1+a/2)/Gamma(1+a):
//
//   cos(pi a/2) G(1-a) G(1+a/2-b-c) G(1+a-b) G(1+a-c)
//   / [G(1-a/2) G(1+a-b-c) G(1+a/2-b) G(1+a/2-c)].
//
// `a` must be a nonpositive integer. Gamma arguments must be positive
// integers or half-integers and the powers of sqrt(pi) must cancel.
Rational dixon_rhs(const Rational& a, const Rational& b, const Rational& c);
inline Rational dixon_rhs(long a, long b, long c) {
  return dixon_rhs(Rational(a), Rational(b), Rational(c));
}

// Gamma at a positive integer or half-integer as coefficient * pi^(k/2).
struct GammaValue {
  Rational coefficient;
  int sqrt_pi_power = 0;
};
GammaValue gamma_exact(const Rational& x);

// J_{s,p} = sum_{beta=0}^p (-1)^beta 2^{2p-2beta} (s+2p-beta)! /
//           [(2p-2beta)! beta!]
Rational j_sum(long s, long p);
// (s+p)! (s+3/2)_p / (p! (1/2)_p)
Rational j_closed(long s, long p);

// Coefficient of the bracket monomial in g_direct. Requires r >= 2, e >= 1, 0 <= 2p' <= (r+1)e and
// 0 <= 2p <= re; zero unless p'-p, e-p'+p and re-p'-p are all >= 0.
Rational n3(long r, long e, long pprime, long p);

// (2e)!^2 / (2e-2p)!^2 * n2(e,e,p), 0 <= p <= e.
Rational n1_closed(long e, long p);

}  // namespace invforge

#endif  // INVFORGE_CLOSEDFORM_HPP_
