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
// Brute-force combinatorial sums that the closed forms are checked against.
//
//  * Bipartite multigraphs on L x R (|L| = |R| = e) with 2p edges and all
//    vertex degrees <= 2: the Wick-contraction expansion of
//    Omega^{2p} Q(x)^e Q(y)^e for a quadratic Q.
//  * Bordered (r+1)x(r+1) transportation matrices with zero diagonal and
//    margins (e,...,e, re-2p), and the symmetric function T_{r,e,p} summed
//    over them.
//  * Direct symbolic evaluation of
//      Omega^{2p'} (x y)^{2p} a_x^{re-2p} a_y^{re-2p} b_x^e b_y^e |_{y:=x}.

#ifndef INVFORGE_ENUMERATE_HPP_
#define INVFORGE_ENUMERATE_HPP_

#include <compare>
#include <functional>
#include <vector>

#include "invforge/arith.hpp"
#include "invforge/poly.hpp"

namespace invforge {

// e x e matrix of edge multiplicities, row index in L, column index in R.
class Multigraph {
 public:
  Multigraph(unsigned e, std::vector<unsigned> entries);

  unsigned e() const { return e_; }
  unsigned at(unsigned i, unsigned j) const { return entries_[i * e_ + j]; }
  unsigned row_sum(unsigned i) const;
  unsigned col_sum(unsigned j) const;
  unsigned edge_count() const;
  const std::vector<unsigned>& entries() const { return entries_; }

  friend auto operator<=>(const Multigraph&, const Multigraph&) = default;

 private:
  unsigned e_;
  std::vector<unsigned> entries_;
};

// Connected components by type. A double edge is a 2-cycle; an isolated
// vertex is a chain whose two endpoints both lie on its own side.
struct ComponentCensus {
  unsigned cycles = 0;
  unsigned ll_chains = 0;
  unsigned rr_chains = 0;
  unsigned lr_chains = 0;

  friend bool operator==(const ComponentCensus&, const ComponentCensus&) = default;
};

using MultigraphVisitor = std::function<void(const Multigraph&)>;

// Every matrix with entry sum 2p and row/column sums <= 2, each exactly
// once, in row-major lexicographic order. Requires 0 <= p <= e.
void for_each_multigraph(unsigned e, unsigned p, const MultigraphVisitor& visit);
std::vector<Multigraph> multigraphs(unsigned e, unsigned p);

ComponentCensus component_census(const Multigraph& g);

// (2p)! 2^{2e-2p+C(G)} / [prod m_ij! prod (2-l_i)! prod (2-c_j)!].
Rational multigraph_weight(const Multigraph& g);

// Sum of multigraph_weight over graphs without an L-R chain component.
Rational n1_brute(unsigned e, unsigned p);

// (r+1)x(r+1) nonnegative matrix, zero diagonal, 0-based indices; index r
// is the border.
class TransportMatrix {
 public:
  TransportMatrix(unsigned r, std::vector<unsigned> entries);

  unsigned r() const { return r_; }
  unsigned size() const { return r_ + 1; }
  unsigned at(unsigned i, unsigned j) const { return entries_[i * (r_ + 1) + j]; }
  unsigned row_sum(unsigned i) const;
  unsigned col_sum(unsigned j) const;
  const std::vector<unsigned>& entries() const { return entries_; }

  friend auto operator<=>(const TransportMatrix&, const TransportMatrix&) = default;

 private:
  unsigned r_;
  std::vector<unsigned> entries_;
};

using TransportVisitor = std::function<void(const TransportMatrix&)>;

// Requires r >= 2, e >= 1, 2p <= re.
void for_each_transport_matrix(unsigned r, unsigned e, unsigned p,
                               const TransportVisitor& visit);
std::vector<TransportMatrix> transport_matrices(unsigned r, unsigned e,
                                                unsigned p);

// Registry {t, z1, ..., zr}.
RegistryPtr tau_registry(unsigned r);

// T_{r,e,p}(t; z_1..z_r) = sum_M prod_{i,j<=r} (z_i - z_j)^{m_ij}
//   prod_i (t - z_i)^{m_{i,r+1}} prod_j (t - z_j)^{m_{r+1,j}} / prod m_ij!
Poly tau(unsigned r, unsigned e, unsigned p);

// Compares (prod l_i^e, prod l_i^e)_{2p} for symbolic linear forms l_i,
// dehomogenised by l_{i,0}=z_i, l_{i,1}=1, x0=-1, x1=t, against
// (re-2p)!^2 (2p)! e!^{2r} / (re)!^2 * T_{r,e,p}.
bool tau_transvectant_check(unsigned r, unsigned e, unsigned p);

// Registry {a0, a1, b0, b1, x0, x1}; g_direct works internally with y0, y1
// added.
RegistryPtr g_registry();

// Requires r >= 2, e >= 1, 2p' <= (r+1)e, 2p <= re.
Poly g_direct(unsigned r, unsigned e, unsigned p, unsigned pprime);

// n3(r,e,p',p) a_x^{2(re-p'-p)} b_x^{2(e-p'+p)} (ab)^{2(p'-p)}, or zero
// when the characteristic function vanishes. Lives in g_registry().
Poly g_closed(unsigned r, unsigned e, unsigned p, unsigned pprime);

// The p that makes g_direct nonzero for a given p': p' itself when
// 2p' <= re, otherwise p' - e.
unsigned g_witness(unsigned r, unsigned e, unsigned pprime);

}  // namespace invforge

#endif  // INVFORGE_ENUMERATE_HPP_
