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

#include "invforge/alphamap.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invforge/errors.hpp"
#include "invforge/transvect.hpp"

namespace invforge {

AlphaVariables alpha_variables(unsigned n, unsigned r) {
  if (n == 0 || r == 0) throw DomainError("alpha_variables needs n, r >= 1");
  AlphaVariables v;
  v.n = n;
  v.r = r;
  std::vector<std::string> names;
  for (unsigned i = 1; i <= r; ++i) {
    std::vector<std::string> xs, ys;
    for (unsigned l = 0; l <= n; ++l) {
      xs.push_back("x" + std::to_string(l) + "_" + std::to_string(i));
      ys.push_back("y" + std::to_string(l) + "_" + std::to_string(i));
    }
    names.insert(names.end(), xs.begin(), xs.end());
    names.insert(names.end(), ys.begin(), ys.end());
    v.x_copies.push_back(std::move(xs));
    v.y_copies.push_back(std::move(ys));
  }
  for (unsigned l = 0; l <= n; ++l) v.x.push_back("x" + std::to_string(l));
  for (unsigned l = 0; l <= n; ++l) v.y.push_back("y" + std::to_string(l));
  names.insert(names.end(), v.x.begin(), v.x.end());
  names.insert(names.end(), v.y.begin(), v.y.end());
  v.registry = VarRegistry::create(std::move(names));
  return v;
}

Poly alpha_image(const std::vector<Poly>& forms, const AlphaVariables& vars,
                 unsigned e) {
  if (forms.size() != vars.r) {
    throw DomainError("alpha_image expects exactly r forms");
  }
  const RegistryPtr reg = forms.front().registry();
  Poly product = Poly::constant(reg, Rational(1));
  for (unsigned i = 0; i < vars.r; ++i) {
    if (!VarRegistry::same(*forms[i].registry(), *reg)) {
      throw DomainError("alpha_image forms must share a registry");
    }
    if (!forms[i].is_homogeneous_in(vars.x_copies[i], 2ul * e)) {
      throw DomainError("alpha_image: form " + std::to_string(i + 1) +
                        " is not of degree " + std::to_string(2 * e) +
                        " in its variable copy");
    }
    product *= polarize(forms[i], vars.x_copies[i], vars.y_copies[i], e);
    if (product.is_zero()) return product;
  }
  std::map<std::string, Poly> erase;
  for (unsigned i = 0; i < vars.r; ++i) {
    for (unsigned l = 0; l <= vars.n; ++l) {
      erase.emplace(vars.x_copies[i][l], Poly::variable(reg, vars.x[l]));
      erase.emplace(vars.y_copies[i][l], Poly::variable(reg, vars.y[l]));
    }
  }
  return product.substitute(erase);
}

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size()) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  ExactMatrix m(labels, labels);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::string ExactMatrix::export_text() const {
  std::ostringstream os;
  os << "shape " << rows() << ' ' << cols() << '\n';
  os << "rows";
  for (const auto& l : row_labels_) os << ' ' << l;
  os << "\ncols";
  for (const auto& l : col_labels_) os << ' ' << l;
  os << '\n';
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j > 0) os << ' ';
      os << at(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  // Lexicographically decreasing enumeration of compositions of `degree`.
  auto rec = [&](auto& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == nvars) {
      m[v] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[v] = e;
      self(self, v + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

namespace {

std::string monomial_label(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[v];
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

ExactMatrix alpha_matrix(unsigned n, unsigned d, unsigned r,
                         std::size_t size_cap) {
  if (n == 0 || r == 0) throw DomainError("alpha_matrix needs n, r >= 1");
  if (d % 2 != 0) throw DomainError("alpha_matrix needs even d");
  const unsigned e = d / 2;
  const unsigned re = r * e;
  const std::size_t nvars = n + 1;

  const BigInt row_count = s2_dim(sym_dim(n, re));
  const BigInt col_count = binomial(sym_dim(n, d).get_si() + r - 1, r);
  if (row_count * col_count > BigInt(static_cast<unsigned long>(size_cap))) {
    throw DomainError("alpha_matrix(" + std::to_string(n) + "," +
                      std::to_string(d) + "," + std::to_string(r) + ") has " +
                      BigInt(row_count * col_count).get_str() +
                      " entries, above the size cap of " +
                      std::to_string(size_cap));
  }

  const AlphaVariables vars = alpha_variables(n, r);
  const auto source = monomial_basis(nvars, d);
  const auto target = monomial_basis(nvars, re);
  std::map<Monomial, std::size_t> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i], i);

  std::vector<std::string> row_labels;
  std::vector<std::vector<std::size_t>> pair_row(target.size(),
                                                 std::vector<std::size_t>(target.size()));
  for (std::size_t a = 0; a < target.size(); ++a) {
    for (std::size_t b = a; b < target.size(); ++b) {
      pair_row[a][b] = row_labels.size();
      row_labels.push_back("{" + monomial_label(target[a], vars.x) + "," +
                           monomial_label(target[b], vars.x) + "}");
    }
  }

  // Multisets i_1 <= ... <= i_r of source monomial indices.
  std::vector<std::vector<std::size_t>> columns;
  std::vector<std::size_t> pick(r, 0);
  auto rec = [&](auto& self, unsigned slot, std::size_t from) -> void {
    if (slot == r) {
      columns.push_back(pick);
      return;
    }
    for (std::size_t s = from; s < source.size(); ++s) {
      pick[slot] = s;
      self(self, slot + 1, s);
    }
  };
  rec(rec, 0, 0);

  std::vector<std::string> col_labels;
  for (const auto& c : columns) {
    std::string label = "[";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) label += '|';
      label += monomial_label(source[c[k]], vars.x);
    }
    col_labels.push_back(label + "]");
  }

  ExactMatrix m(std::move(row_labels), std::move(col_labels));
  const auto& reg = vars.registry;
  const std::size_t xbase = reg->index_of(vars.x[0]);
  const std::size_t ybase = reg->index_of(vars.y[0]);

  for (std::size_t col = 0; col < columns.size(); ++col) {
    std::vector<Poly> forms;
    for (unsigned i = 0; i < r; ++i) {
      Monomial exps(reg->size(), 0);
      const Monomial& src = source[columns[col][i]];
      for (std::size_t l = 0; l < nvars; ++l) {
        exps[reg->index_of(vars.x_copies[i][l])] = src[l];
      }
      forms.push_back(Poly::monomial(reg, std::move(exps), Rational(1)));
    }
    const Poly image = alpha_image(forms, vars, e);
    for (const auto& [mono, coeff] : image.terms()) {
      Monomial xm(nvars), ym(nvars);
      for (std::size_t l = 0; l < nvars; ++l) {
        xm[l] = mono[xbase + l];
        ym[l] = mono[ybase + l];
      }
      const std::size_t a = target_index.at(xm), b = target_index.at(ym);
      if (a > b) continue;  // mirrored coefficient, same by symmetry
      m.at(pair_row[a][b], col) = coeff;
    }
  }
  return m;
}

BigInt sym_dim(unsigned n, unsigned m) { return binomial(n + m, m); }

BigInt s2_dim(const BigInt& dim) { return dim * (dim + 1) / 2; }

}  // namespace invforge
