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

#include "invforge/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "invforge/errors.hpp"

namespace invforge {

// ---------------------------------------------------------------------------
// VarRegistry

VarRegistry::VarRegistry(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("empty variable name");
    if (!index_.emplace(names_[i], i).second) {
      throw DomainError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

RegistryPtr VarRegistry::create(std::vector<std::string> names) {
  return RegistryPtr(new VarRegistry(std::move(names)));
}

RegistryPtr VarRegistry::extended(const std::vector<std::string>& names) const {
  std::vector<std::string> all = names_;
  for (const auto& n : names) {
    if (std::find(all.begin(), all.end(), n) == all.end()) all.push_back(n);
  }
  return create(std::move(all));
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarRegistry::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

bool VarRegistry::same(const VarRegistry& a, const VarRegistry& b) {
  return &a == &b || a.names_ == b.names_;
}

// ---------------------------------------------------------------------------
// Monomial order

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw DomainError("exponent overflow");
  }
  return a + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(RegistryPtr registry) : registry_(std::move(registry)) {
  if (!registry_) throw DomainError("polynomial without a registry");
}

Poly Poly::constant(RegistryPtr registry, const Rational& value) {
  Poly p(std::move(registry));
  if (!value.is_zero()) p.terms_.emplace(Monomial(p.registry_->size(), 0), value);
  return p;
}

Poly Poly::variable(RegistryPtr registry, std::string_view name,
                    Exponent power) {
  Poly p(std::move(registry));
  Monomial m(p.registry_->size(), 0);
  m[p.registry_->index_of(name)] = power;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::monomial(RegistryPtr registry, Monomial exponents,
                    const Rational& coefficient) {
  Poly p(std::move(registry));
  if (exponents.size() != p.registry_->size()) {
    throw DomainError("exponent vector length does not match registry");
  }
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
}

Rational Poly::constant_term() const {
  return coefficient(Monomial(registry_->size(), 0));
}

Rational Poly::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::require_same_registry(const Poly& other) const {
  if (!VarRegistry::same(*registry_, *other.registry_)) {
    throw DomainError("registry mismatch between polynomials");
  }
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_registry(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_registry(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_registry(b);
  Poly result(a.registry_);
  if (a.is_zero() || b.is_zero()) return result;
  const std::size_t n = a.registry_->size();
  Monomial m(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < n; ++v) m[v] = checked_add(ma[v], mb[v]);
      auto [it, inserted] = result.terms_.try_emplace(m, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(result.terms_, [](const auto& t) { return t.second.is_zero(); });
  return result;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly result(*this);
  for (auto& [m, c] : result.terms_) c = -c;
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  return VarRegistry::same(*a.registry_, *b.registry_) && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(registry_, Rational(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::differentiate(std::string_view var, unsigned times) const {
  return differentiate(registry_->index_of(var), times);
}

Poly Poly::differentiate(std::size_t var_index, unsigned times) const {
  if (var_index >= registry_->size()) {
    throw DomainError("variable index out of range");
  }
  if (times == 0) return *this;
  Poly result(registry_);
  for (const auto& [m, c] : terms_) {
    const Exponent e = m[var_index];
    if (e < times) continue;
    // e (e-1) ... (e-times+1)
    BigInt falling = 1;
    for (Exponent t = 0; t < times; ++t) falling *= static_cast<unsigned long>(e - t);
    Monomial dm = m;
    dm[var_index] = e - times;
    result.terms_.emplace(std::move(dm), c * Rational(falling));
  }
  return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  if (bindings.empty()) return *this;

  RegistryPtr target = bindings.begin()->second.registry_;
  for (const auto& [name, value] : bindings) {
    if (!VarRegistry::same(*value.registry_, *target)) {
      throw DomainError("substitution values do not share a registry");
    }
    registry_->index_of(name);  // every bound variable must be ours
  }

  const std::size_t n = registry_->size();
  // For each source variable: either a replacement (with cached powers) or a
  // target index it maps to unchanged.
  std::vector<const Poly*> replacement(n, nullptr);
  std::vector<std::size_t> target_index(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = bindings.find(registry_->name(v));
    if (it != bindings.end()) {
      replacement[v] = &it->second;
    } else {
      auto idx = target->find(registry_->name(v));
      if (!idx) {
        // Only an error if the variable actually occurs.
        target_index[v] = std::numeric_limits<std::size_t>::max();
      } else {
        target_index[v] = *idx;
      }
    }
  }
  std::vector<std::vector<Poly>> power_cache(n);
  auto power_of = [&](std::size_t v, Exponent e) -> const Poly& {
    auto& cache = power_cache[v];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *replacement[v]);
    return cache[e];
  };

  Poly result(target);
  for (const auto& [m, c] : terms_) {
    Monomial base(target->size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (replacement[v] != nullptr || m[v] == 0) continue;
      if (target_index[v] == std::numeric_limits<std::size_t>::max()) {
        throw DomainError("variable '" + registry_->name(v) +
                          "' missing from substitution target registry");
      }
      base[target_index[v]] = checked_add(base[target_index[v]], m[v]);
    }
    Poly term = monomial(target, std::move(base), c);
    for (std::size_t v = 0; v < n; ++v) {
      if (replacement[v] != nullptr && m[v] > 0) term *= power_of(v, m[v]);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

Poly Poly::coefficient_of(
    const std::map<std::string, Exponent>& assignment) const {
  std::vector<std::pair<std::size_t, Exponent>> fixed;
  for (const auto& [name, e] : assignment) {
    fixed.emplace_back(registry_->index_of(name), e);
  }
  Poly result(registry_);
  for (const auto& [m, c] : terms_) {
    bool match = std::all_of(fixed.begin(), fixed.end(),
                             [&](const auto& f) { return m[f.first] == f.second; });
    if (!match) continue;
    Monomial rest = m;
    for (const auto& f : fixed) rest[f.first] = 0;
    result.add_term(rest, c);
  }
  return result;
}

Poly Poly::embed(RegistryPtr target) const {
  if (VarRegistry::same(*registry_, *target)) {
    Poly copy(*this);
    copy.registry_ = std::move(target);
    return copy;
  }
  const std::size_t n = registry_->size();
  std::vector<std::optional<std::size_t>> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = target->find(registry_->name(v));
  Poly result(target);
  for (const auto& [m, c] : terms_) {
    Monomial lifted(target->size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] == 0) continue;
      if (!map[v]) {
        throw DomainError("cannot embed: variable '" + registry_->name(v) +
                          "' absent from target registry");
      }
      lifted[*map[v]] = m[v];
    }
    result.terms_.emplace(std::move(lifted), c);
  }
  return result;
}

Exponent Poly::degree_in(std::string_view var) const {
  const std::size_t idx = registry_->index_of(var);
  Exponent best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[idx]);
  return best;
}

unsigned long Poly::degree_in(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(registry_->index_of(v));
  unsigned long best = 0;
  for (const auto& [m, c] : terms_) {
    unsigned long d = 0;
    for (auto i : idx) d += m[i];
    best = std::max(best, d);
  }
  return best;
}

bool Poly::is_homogeneous_in(const std::vector<std::string>& vars,
                             unsigned long degree) const {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(registry_->index_of(v));
  for (const auto& [m, c] : terms_) {
    unsigned long d = 0;
    for (auto i : idx) d += m[i];
    if (d != degree) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    bool wrote = false;
    const bool constant_monomial =
        std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
    if (mag != Rational(1) || constant_monomial) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << '*';
      os << registry_->name(v);
      if (m[v] > 1) os << '^' << m[v];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_string();
}

}  // namespace invforge
