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
// Sparse multivariate polynomials over Rational.
//
// Every Poly is tied to a VarRegistry, an immutable ordered list of variable
// names. Registries never change once created; `extended` produces a new
// registry whose prefix is the old one, and `Poly::embed` lifts a polynomial
// into any registry that contains all of its variable names.
//
// Text grammar (whitespace insignificant):
//
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := rational | name ['^' k]
//
// Serialization lists terms in graded-lex order (registry order decides ties)
// with explicit signs, e.g. "x0^2 - 2*x0*x1 + 3/2".

#ifndef INVFORGE_POLY_HPP_
#define INVFORGE_POLY_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invforge/arith.hpp"

namespace invforge {

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

class VarRegistry {
 public:
  static RegistryPtr create(std::vector<std::string> names);

  // New registry: this registry's names followed by those of `names` that
  // are not already present.
  RegistryPtr extended(const std::vector<std::string>& names) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_[index]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws DomainError("unknown variable ...") when absent.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  // Same object or identical name lists.
  static bool same(const VarRegistry& a, const VarRegistry& b);

 private:
  explicit VarRegistry(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

// Graded-lex, larger monomials first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(RegistryPtr registry);

  static Poly constant(RegistryPtr registry, const Rational& value);
  static Poly variable(RegistryPtr registry, std::string_view name,
                       Exponent power = 1);
  static Poly monomial(RegistryPtr registry, Monomial exponents,
                       const Rational& coefficient);
  static Poly parse(std::string_view text, RegistryPtr registry);

  const RegistryPtr& registry() const { return registry_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& exponents) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned n) const;

  Poly differentiate(std::string_view var, unsigned times = 1) const;
  Poly differentiate(std::size_t var_index, unsigned times = 1) const;

  // Simultaneous substitution. All replacement polynomials must share one
  // registry, which becomes the registry of the result; every unbound
  // variable of *this must exist there by name.
  Poly substitute(const std::map<std::string, Poly>& bindings) const;

  // Polynomial in the remaining variables multiplying the monomial given by
  // `assignment` (variables of the assignment set to exponent zero).
  Poly coefficient_of(const std::map<std::string, Exponent>& assignment) const;

  Poly embed(RegistryPtr target) const;

  // Largest exponent of `var` over all terms (0 for the zero polynomial).
  Exponent degree_in(std::string_view var) const;
  // Largest total degree in the given variable subset.
  unsigned long degree_in(const std::vector<std::string>& vars) const;
  // True iff every term has exactly `degree` total degree in `vars`.
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous_in(const std::vector<std::string>& vars,
                         unsigned long degree) const;

  std::string to_string() const;

 private:
  void require_same_registry(const Poly& other) const;
  void add_term(const Monomial& m, const Rational& c);

  RegistryPtr registry_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace invforge

#endif  // INVFORGE_POLY_HPP_
