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

#include "invforge/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "invforge/errors.hpp"

namespace invforge {

// ---------------------------------------------------------------------------
// Multigraphs

Multigraph::Multigraph(unsigned e, std::vector<unsigned> entries)
    : e_(e), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(e_) * e_) {
    throw DomainError("multigraph entry count does not match e*e");
  }
}

unsigned Multigraph::row_sum(unsigned i) const {
  unsigned s = 0;
  for (unsigned j = 0; j < e_; ++j) s += at(i, j);
  return s;
}

unsigned Multigraph::col_sum(unsigned j) const {
  unsigned s = 0;
  for (unsigned i = 0; i < e_; ++i) s += at(i, j);
  return s;
}

unsigned Multigraph::edge_count() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

void for_each_multigraph(unsigned e, unsigned p, const MultigraphVisitor& visit) {
  if (p > e) throw DomainError("multigraphs need 0 <= p <= e");
  const unsigned cells = e * e;
  const unsigned total = 2 * p;
  std::vector<unsigned> m(cells, 0), row(e, 0), col(e, 0);

  auto rec = [&](auto& self, unsigned cell, unsigned placed) -> void {
    if (placed == total) {
      // Remaining cells stay zero.
      std::fill(m.begin() + cell, m.end(), 0u);
      visit(Multigraph(e, m));
      return;
    }
    if (cell == cells) return;
    const unsigned i = cell / e, j = cell % e;
    // Capacity still available from this row onward.
    unsigned capacity = 2 - row[i];
    for (unsigned ii = i + 1; ii < e; ++ii) capacity += 2;
    if (placed + capacity < total) return;
    const unsigned hi = std::min({2 - row[i], 2 - col[j], total - placed});
    for (unsigned v = 0; v <= hi; ++v) {
      m[cell] = v;
      row[i] += v;
      col[j] += v;
      self(self, cell + 1, placed + v);
      row[i] -= v;
      col[j] -= v;
    }
    m[cell] = 0;
  };
  rec(rec, 0, 0);
}

std::vector<Multigraph> multigraphs(unsigned e, unsigned p) {
  std::vector<Multigraph> out;
  for_each_multigraph(e, p, [&](const Multigraph& g) { out.push_back(g); });
  return out;
}

ComponentCensus component_census(const Multigraph& g) {
  const unsigned e = g.e();
  const unsigned vertices = 2 * e;  // L = 0..e-1, R = e..2e-1
  std::vector<unsigned> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<unsigned> degree(vertices, 0);
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j < e; ++j) {
      const unsigned m = g.at(i, j);
      if (m == 0) continue;
      degree[i] += m;
      degree[e + j] += m;
      parent[find(i)] = find(e + j);
    }
  }
  // Per component: endpoint sides (vertices of degree < 2).
  struct Info {
    unsigned members = 0;
    unsigned l_ends = 0;
    unsigned r_ends = 0;
  };
  std::vector<Info> info(vertices);
  for (unsigned v = 0; v < vertices; ++v) {
    Info& c = info[find(v)];
    ++c.members;
    if (degree[v] >= 2) continue;
    // An isolated vertex supplies both ends of its zero-length chain.
    const unsigned ends = degree[v] == 0 ? 2 : 1;
    (v < e ? c.l_ends : c.r_ends) += ends;
  }
  ComponentCensus census;
  for (unsigned v = 0; v < vertices; ++v) {
    if (find(v) != v) continue;
    const Info& c = info[v];
    if (c.l_ends + c.r_ends == 0) {
      ++census.cycles;
    } else if (c.r_ends == 0) {
      ++census.ll_chains;
    } else if (c.l_ends == 0) {
      ++census.rr_chains;
    } else {
      ++census.lr_chains;
    }
  }
  return census;
}

Rational multigraph_weight(const Multigraph& g) {
  const unsigned e = g.e();
  const unsigned edges = g.edge_count();
  const ComponentCensus census = component_census(g);
  BigInt den = 1;
  for (unsigned m : g.entries()) den *= factorial(m);
  for (unsigned i = 0; i < e; ++i) den *= factorial(2 - g.row_sum(i));
  for (unsigned j = 0; j < e; ++j) den *= factorial(2 - g.col_sum(j));
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * e - edges + census.cycles);
  return Rational(factorial(edges) * pow2, den);
}

Rational n1_brute(unsigned e, unsigned p) {
  Rational total(0);
  for_each_multigraph(e, p, [&](const Multigraph& g) {
    if (component_census(g).lr_chains > 0) return;
    total += multigraph_weight(g);
  });
  return total;
}

// ---------------------------------------------------------------------------
// Transportation matrices

TransportMatrix::TransportMatrix(unsigned r, std::vector<unsigned> entries)
    : r_(r), entries_(std::move(entries)) {
  const std::size_t n = r_ + 1;
  if (entries_.size() != n * n) {
    throw DomainError("transport matrix entry count does not match (r+1)^2");
  }
  for (unsigned i = 0; i <= r_; ++i) {
    if (at(i, i) != 0) throw DomainError("transport matrix diagonal must be zero");
  }
}

unsigned TransportMatrix::row_sum(unsigned i) const {
  unsigned s = 0;
  for (unsigned j = 0; j <= r_; ++j) s += at(i, j);
  return s;
}

unsigned TransportMatrix::col_sum(unsigned j) const {
  unsigned s = 0;
  for (unsigned i = 0; i <= r_; ++i) s += at(i, j);
  return s;
}

void for_each_transport_matrix(unsigned r, unsigned e, unsigned p,
                               const TransportVisitor& visit) {
  if (r < 2 || e < 1 || 2 * p > r * e) {
    throw DomainError("transport matrices need r >= 2, e >= 1, 2p <= re");
  }
  const unsigned n = r + 1;
  std::vector<unsigned> margin(n, e);
  margin[r] = r * e - 2 * p;
  std::vector<unsigned> m(n * n, 0), row_left = margin, col_left = margin;

  auto last_free_col = [&](unsigned i) { return i == n - 1 ? n - 2 : n - 1; };
  // After row i is complete, every column must still be fillable by the
  // rows below it (skipping its own diagonal cell).
  auto columns_feasible = [&](unsigned i) {
    for (unsigned j = 0; j < n; ++j) {
      unsigned supply = 0;
      for (unsigned k = i + 1; k < n; ++k) {
        if (k != j) supply += row_left[k];
      }
      if (col_left[j] > supply) return false;
    }
    return true;
  };

  auto rec = [&](auto& self, unsigned cell) -> void {
    if (cell == n * n) {
      if (std::all_of(col_left.begin(), col_left.end(),
                      [](unsigned c) { return c == 0; })) {
        visit(TransportMatrix(r, m));
      }
      return;
    }
    const unsigned i = cell / n, j = cell % n;
    if (i == j) {
      self(self, cell + 1);
      return;
    }
    if (j == last_free_col(i)) {
      const unsigned v = row_left[i];
      if (v > col_left[j]) return;
      m[cell] = v;
      row_left[i] -= v;
      col_left[j] -= v;
      if (columns_feasible(i)) self(self, cell + 1);
      row_left[i] += v;
      col_left[j] += v;
      m[cell] = 0;
      return;
    }
    const unsigned hi = std::min(row_left[i], col_left[j]);
    for (unsigned v = 0; v <= hi; ++v) {
      m[cell] = v;
      row_left[i] -= v;
      col_left[j] -= v;
      self(self, cell + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
    m[cell] = 0;
  };
  rec(rec, 0);
}

std::vector<TransportMatrix> transport_matrices(unsigned r, unsigned e,
                                                unsigned p) {
  std::vector<TransportMatrix> out;
  for_each_transport_matrix(r, e, p,
                            [&](const TransportMatrix& t) { out.push_back(t); });
  return out;
}

}  // namespace invforge
