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

#include "invforge/transvect.hpp"

#include <algorithm>
#include <set>

#include "invforge/errors.hpp"

namespace invforge {

BinaryForm::BinaryForm(Poly poly, VarPair xpair, unsigned degree)
    : poly_(std::move(poly)), xpair_(std::move(xpair)), degree_(degree) {
  if (xpair_.first == xpair_.second) {
    throw DomainError("binary form needs two distinct variables");
  }
  if (!poly_.is_homogeneous_in(xpair_.as_vector(), degree_)) {
    throw DomainError("polynomial is not homogeneous of degree " +
                      std::to_string(degree_) + " in (" + xpair_.first + "," +
                      xpair_.second + ")");
  }
}

BinaryForm BinaryForm::zero(RegistryPtr registry, VarPair xpair,
                            unsigned degree) {
  return BinaryForm(Poly(std::move(registry)), std::move(xpair), degree);
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.xpair_ == b.xpair_)) throw DomainError("mismatched variable pairs");
  return BinaryForm(a.poly_ * b.poly_, a.xpair_, a.degree_ + b.degree_);
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
  return BinaryForm(f.poly_ * s, f.xpair_, f.degree_);
}

BinaryForm BinaryForm::pow(unsigned n) const {
  return BinaryForm(poly_.pow(n), xpair_, degree_ * n);
}

namespace {

void require_distinct(const RegistryPtr& reg,
                      const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    reg->index_of(n);
    if (!seen.insert(n).second) {
      throw DomainError("variable clash on '" + n + "'");
    }
  }
}

Poly restore_diagonal(const Poly& p, const VarPair& x, const VarPair& y) {
  const auto& reg = p.registry();
  return p.substitute({{y.first, Poly::variable(reg, x.first)},
                       {y.second, Poly::variable(reg, x.second)}});
}

}  // namespace

Poly omega_apply(const Poly& p, const VarPair& x, const VarPair& y,
                 unsigned k) {
  const auto& reg = p.registry();
  require_distinct(reg, {x.first, x.second, y.first, y.second});
  if (k == 0) return p;
  const std::size_t x0 = reg->index_of(x.first), x1 = reg->index_of(x.second);
  const std::size_t y0 = reg->index_of(y.first), y1 = reg->index_of(y.second);
  Poly result(reg);
  for (unsigned i = 0; i <= k; ++i) {
    // (-1)^i C(k,i) d^{k-i}/dx0 d^{k-i}/dy1 d^i/dx1 d^i/dy0
    Poly branch = p.differentiate(x0, k - i)
                      .differentiate(y1, k - i)
                      .differentiate(x1, i)
                      .differentiate(y0, i);
    if (branch.is_zero()) continue;
    branch *= Rational(BigInt(binomial(k, i) * sign_power(i)));
    result += branch;
  }
  return result;
}

Poly polarize(const Poly& p, const std::vector<std::string>& xvars,
              const std::vector<std::string>& yvars, unsigned times) {
  if (xvars.size() != yvars.size()) {
    throw DomainError("polarization variable lists differ in length");
  }
  const auto& reg = p.registry();
  std::vector<std::size_t> xi, yi;
  for (const auto& v : xvars) xi.push_back(reg->index_of(v));
  for (const auto& v : yvars) yi.push_back(reg->index_of(v));
  std::vector<Poly> ys;
  for (const auto& v : yvars) ys.push_back(Poly::variable(reg, v));

  Poly current = p;
  for (unsigned t = 0; t < times && !current.is_zero(); ++t) {
    Poly next(reg);
    for (std::size_t l = 0; l < xi.size(); ++l) {
      Poly d = current.differentiate(xi[l]);
      if (!d.is_zero()) next += ys[l] * d;
    }
    current = std::move(next);
  }
  return current;
}

BinaryForm transvectant(const BinaryForm& a, const BinaryForm& b, unsigned k) {
  if (!(a.xpair() == b.xpair())) {
    throw DomainError("transvectant of forms in different variable pairs");
  }
  if (!VarRegistry::same(*a.poly().registry(), *b.poly().registry())) {
    throw DomainError("transvectant of forms over different registries");
  }
  const unsigned da = a.degree(), db = b.degree();
  const auto& reg = a.poly().registry();
  if (k > std::min(da, db)) {
    const long clamped = std::max(0l, static_cast<long>(da + db) - 2l * k);
    return BinaryForm::zero(reg, a.xpair(), static_cast<unsigned>(clamped));
  }
  const std::size_t x0 = reg->index_of(a.xpair().first);
  const std::size_t x1 = reg->index_of(a.xpair().second);

  // Omega^k A(x)B(y) splits into sum_i (-1)^i C(k,i) A_{x0^{k-i} x1^i}(x)
  // B_{y1^{k-i} y0^i}(y); restoring y:=x just renames B's derivatives.
  Poly sum(reg);
  for (unsigned i = 0; i <= k; ++i) {
    Poly da_part = a.poly().differentiate(x0, k - i).differentiate(x1, i);
    if (da_part.is_zero()) continue;
    Poly db_part = b.poly().differentiate(x1, k - i).differentiate(x0, i);
    if (db_part.is_zero()) continue;
    Poly term = da_part * db_part;
    term *= Rational(BigInt(binomial(k, i) * sign_power(i)));
    sum += term;
  }
  const Rational scale(factorial(da - k) * factorial(db - k),
                       factorial(da) * factorial(db));
  sum *= scale;
  return BinaryForm(std::move(sum), a.xpair(), da + db - 2 * k);
}

BinaryForm transvectant_via_omega(const BinaryForm& a, const BinaryForm& b,
                                  unsigned k, const VarPair& y) {
  if (!(a.xpair() == b.xpair())) {
    throw DomainError("transvectant of forms in different variable pairs");
  }
  const unsigned da = a.degree(), db = b.degree();
  const auto& reg = a.poly().registry();
  const VarPair& x = a.xpair();
  if (k > std::min(da, db)) {
    const long clamped = std::max(0l, static_cast<long>(da + db) - 2l * k);
    return BinaryForm::zero(reg, x, static_cast<unsigned>(clamped));
  }
  Poly b_in_y = b.poly().substitute({{x.first, Poly::variable(reg, y.first)},
                                     {x.second, Poly::variable(reg, y.second)}});
  Poly omega = omega_apply(a.poly() * b_in_y, x, y, k);
  Poly diag = restore_diagonal(omega, x, y);
  diag *= Rational(factorial(da - k) * factorial(db - k),
                   factorial(da) * factorial(db));
  return BinaryForm(std::move(diag), x, da + db - 2 * k);
}

BinaryForm pi_p(const Poly& g, const VarPair& x, const VarPair& y, unsigned p) {
  const auto xv = x.as_vector(), yv = y.as_vector();
  require_distinct(g.registry(), {x.first, x.second, y.first, y.second});
  const unsigned long dx = g.degree_in(xv), dy = g.degree_in(yv);
  if (!g.is_homogeneous_in(xv, dx) || !g.is_homogeneous_in(yv, dy) ||
      (dx != dy && !g.is_zero())) {
    throw DomainError("pi_p needs a polynomial bihomogeneous of equal degree");
  }
  const long degree = std::max(0l, 2l * static_cast<long>(dx) - 4l * p);
  Poly omega = omega_apply(g, x, y, 2 * p);
  return BinaryForm(restore_diagonal(omega, x, y), x,
                    static_cast<unsigned>(degree));
}

Poly discriminant(const BinaryForm& q) {
  if (q.degree() != 2) throw DomainError("discriminant needs a quadratic");
  const VarPair& x = q.xpair();
  const Poly a = q.poly().coefficient_of({{x.first, 2}, {x.second, 0}});
  const Poly b = q.poly().coefficient_of({{x.first, 1}, {x.second, 1}});
  const Poly c = q.poly().coefficient_of({{x.first, 0}, {x.second, 2}});
  return b * b - Rational(4) * (a * c);
}

std::vector<std::string> coefficient_names(const std::string& prefix,
                                           unsigned degree) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= degree; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

BinaryForm generic_form(const RegistryPtr& registry, const std::string& prefix,
                        unsigned degree, const VarPair& x) {
  Poly f(registry);
  const auto names = coefficient_names(prefix, degree);
  for (unsigned i = 0; i <= degree; ++i) {
    f += Poly::variable(registry, names[i]) *
         Poly::variable(registry, x.first, degree - i) *
         Poly::variable(registry, x.second, i);
  }
  return BinaryForm(std::move(f), x, degree);
}

BinaryForm linear_form(const RegistryPtr& registry, const std::string& c0,
                       const std::string& c1, const VarPair& x) {
  Poly l = Poly::variable(registry, c0) * Poly::variable(registry, x.first) +
           Poly::variable(registry, c1) * Poly::variable(registry, x.second);
  return BinaryForm(std::move(l), x, 1);
}

}  // namespace invforge
