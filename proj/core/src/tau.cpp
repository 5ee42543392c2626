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

#include <map>
#include <string>
#include <utility>

#include "invforge/enumerate.hpp"
#include "invforge/errors.hpp"
#include "invforge/transvect.hpp"

namespace invforge {

RegistryPtr tau_registry(unsigned r) {
  std::vector<std::string> names{"t"};
  for (unsigned i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
  return VarRegistry::create(std::move(names));
}

Poly tau(unsigned r, unsigned e, unsigned p) {
  const RegistryPtr reg = tau_registry(r);
  // Points 0..r-1 are z_1..z_r, point r is t.
  std::vector<Poly> point;
  for (unsigned i = 1; i <= r; ++i) {
    point.push_back(Poly::variable(reg, "z" + std::to_string(i)));
  }
  point.push_back(Poly::variable(reg, "t"));

  std::map<std::pair<unsigned, unsigned>, std::vector<Poly>> powers;
  auto factor = [&](unsigned i, unsigned j, unsigned k) -> const Poly& {
    // (z_i - z_j), except that the border row/column puts t first.
    auto& cache = powers[{i, j}];
    if (cache.empty()) cache.push_back(Poly::constant(reg, Rational(1)));
    while (cache.size() <= k) {
      const Poly base = (i == r) ? point[r] - point[j]
                      : (j == r) ? point[r] - point[i]
                                 : point[i] - point[j];
      cache.push_back(cache.back() * base);
    }
    return cache[k];
  };

  Poly total(reg);
  for_each_transport_matrix(r, e, p, [&](const TransportMatrix& m) {
    Poly term = Poly::constant(reg, Rational(1));
    BigInt den = 1;
    for (unsigned i = 0; i <= r; ++i) {
      for (unsigned j = 0; j <= r; ++j) {
        const unsigned k = m.at(i, j);
        if (k == 0) continue;
        term *= factor(i, j, k);
        den *= factorial(k);
      }
    }
    term *= Rational(BigInt(1), den);
    total += term;
  });
  return total;
}

bool tau_transvectant_check(unsigned r, unsigned e, unsigned p) {
  if (r < 2 || e < 1 || 2 * p > r * e) return false;
  std::vector<std::string> names;
  for (unsigned i = 1; i <= r; ++i) {
    names.push_back("l" + std::to_string(i) + "_0");
    names.push_back("l" + std::to_string(i) + "_1");
  }
  names.push_back(kX.first);
  names.push_back(kX.second);
  const RegistryPtr reg = VarRegistry::create(names);

  BinaryForm product(Poly::constant(reg, Rational(1)), kX, 0);
  for (unsigned i = 1; i <= r; ++i) {
    const std::string s = "l" + std::to_string(i);
    product = product * linear_form(reg, s + "_0", s + "_1").pow(e);
  }
  const BinaryForm lhs = transvectant(product, product, 2 * p);

  const RegistryPtr treg = tau_registry(r);
  std::map<std::string, Poly> bindings;
  for (unsigned i = 1; i <= r; ++i) {
    const std::string s = "l" + std::to_string(i);
    bindings.emplace(s + "_0", Poly::variable(treg, "z" + std::to_string(i)));
    bindings.emplace(s + "_1", Poly::constant(treg, Rational(1)));
  }
  bindings.emplace(kX.first, Poly::constant(treg, Rational(-1)));
  bindings.emplace(kX.second, Poly::variable(treg, "t"));
  const Poly left = lhs.poly().substitute(bindings);

  const long re = static_cast<long>(r) * e;
  BigInt efact_pow;
  mpz_pow_ui(efact_pow.get_mpz_t(), factorial(e).get_mpz_t(), 2ul * r);
  const BigInt num = factorial(re - 2 * p) * factorial(re - 2 * p) *
                     factorial(2 * p) * efact_pow;
  const BigInt den = factorial(re) * factorial(re);
  const Poly right = tau(r, e, p) * Rational(num, den);
  return left == right;
}

}  // namespace invforge
