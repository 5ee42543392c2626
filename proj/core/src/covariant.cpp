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

#include "invforge/covariant.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "invforge/closedform.hpp"
#include "invforge/errors.hpp"

namespace invforge {

bool in_cubic_range(unsigned d, unsigned i, unsigned j) {
  if (d % 2 != 0 || i > d / 2) return false;
  const long cap = std::min<long>(d, 2l * d - 4l * i);
  return static_cast<long>(j) <= cap;
}

CovariantExpr CovariantExpr::u(unsigned d, unsigned i, unsigned j) {
  CovariantExpr c;
  c.kind = Kind::kU;
  c.d = d;
  c.i = i;
  c.j = j;
  return c;
}

CovariantExpr CovariantExpr::phi(unsigned d, unsigned i, unsigned j,
                                 unsigned i2, unsigned j2) {
  if (j % 2 != 0 || j2 % 2 != 0) throw DomainError("Phi needs even j");
  if (2 * i + j != 2 * i2 + j2) throw DomainError("Phi needs 2i+j = 2i'+j'");
  if (!in_cubic_range(d, i, j) || !in_cubic_range(d, i2, j2)) {
    throw DomainError("Phi index pair out of range for d = " + std::to_string(d));
  }
  CovariantExpr c;
  c.kind = Kind::kPhi;
  c.d = d;
  c.i = i;
  c.j = j;
  c.i2 = i2;
  c.j2 = j2;
  return c;
}

CovariantExpr CovariantExpr::parse(std::string_view name, unsigned d) {
  std::string s;
  for (char ch : name) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> CovariantExpr {
    throw DomainError("cannot parse covariant name '" + std::string(name) +
                      "' (expected U(i,j) or Phi(i,j,i',j'))");
  };
  std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return fail();
  const std::string head = s.substr(0, open);
  std::vector<unsigned> args;
  std::string_view body(s.data() + open + 1, s.size() - open - 2);
  while (true) {
    const std::size_t comma = body.find(',');
    const std::string_view piece = body.substr(0, comma);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      return fail();
    }
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if ((head == "U" || head == "u") && args.size() == 2) {
    return u(d, args[0], args[1]);
  }
  if ((head == "Phi" || head == "phi") && args.size() == 4) {
    return phi(d, args[0], args[1], args[2], args[3]);
  }
  return fail();
}

std::string CovariantExpr::name() const {
  auto n = [](unsigned v) { return std::to_string(v); };
  if (kind == Kind::kU) return "U(" + n(i) + "," + n(j) + ")";
  return "Phi(" + n(i) + "," + n(j) + "," + n(i2) + "," + n(j2) + ")";
}

unsigned CovariantExpr::order() const {
  const long o = 3l * d - 4l * i - 2l * j;
  return o > 0 ? static_cast<unsigned>(o) : 0u;
}

namespace {

void check_form(unsigned d, const BinaryForm& f) {
  if (d % 2 != 0) throw DomainError("covariants need an even degree d");
  if (f.degree() != d) {
    throw DomainError("form has degree " + std::to_string(f.degree()) +
                      ", expected " + std::to_string(d));
  }
}

}  // namespace

BinaryForm u_cov(unsigned d, unsigned i, unsigned j, const BinaryForm& f) {
  check_form(d, f);
  CovariantEvaluator ev(f);
  return ev.u(i, j);
}

Rational mu(unsigned e, unsigned i, unsigned j) {
  if (j % 2 != 0) throw DomainError("mu needs even j");
  if (!in_cubic_range(2 * e, i, j)) {
    throw DomainError("mu index pair out of range");
  }
  const long k = j / 2;
  const Rational value = n2(e, e, i) * n2(2l * e - 2l * i, e, k);
  return sign_power(i + k) > 0 ? value : -value;
}

BinaryForm phi(unsigned d, unsigned i, unsigned j, unsigned i2, unsigned j2,
               const BinaryForm& f) {
  check_form(d, f);
  CovariantEvaluator ev(f);
  return ev.evaluate(CovariantExpr::phi(d, i, j, i2, j2));
}

std::vector<CovariantExpr> set_S(unsigned d) {
  if (d % 2 != 0) throw DomainError("set_S needs even d");
  if (d < 4) throw DomainError("set_S needs d >= 4");
  const unsigned e = d / 2;
  std::vector<CovariantExpr> out;
  for (unsigned i = e + 1; i-- > 0;) {
    for (unsigned j = 1; in_cubic_range(d, i, j); j += 2) {
      out.push_back(CovariantExpr::u(d, i, j));
    }
  }
  std::map<unsigned, std::vector<std::pair<unsigned, unsigned>>> classes;
  for (unsigned i = 0; i <= e; ++i) {
    for (unsigned j = 0; in_cubic_range(d, i, j); j += 2) {
      classes[2 * i + j].emplace_back(i, j);
    }
  }
  for (auto& [s, pairs] : classes) {
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
      out.push_back(CovariantExpr::phi(d, pairs[k].first, pairs[k].second,
                                       pairs[k + 1].first, pairs[k + 1].second));
    }
  }
  return out;
}

std::vector<CovariantExpr> octavic_preset() {
  return {CovariantExpr::u(8, 0, 3),         CovariantExpr::u(8, 0, 5),
          CovariantExpr::u(8, 0, 7),         CovariantExpr::phi(8, 0, 6, 1, 4),
          CovariantExpr::phi(8, 0, 8, 1, 6), CovariantExpr::u(8, 3, 3)};
}

CovariantEvaluator::CovariantEvaluator(BinaryForm f) : f_(std::move(f)) {}

const BinaryForm& CovariantEvaluator::self_transvectant(unsigned i) {
  auto it = ff_.find(i);
  if (it == ff_.end()) {
    it = ff_.emplace(i, transvectant(f_, f_, 2 * i)).first;
  }
  return it->second;
}

const BinaryForm& CovariantEvaluator::u(unsigned i, unsigned j) {
  auto it = u_.find({i, j});
  if (it != u_.end()) return it->second;
  const unsigned d = f_.degree();
  if (!in_cubic_range(d, i, j)) {
    const long o = 3l * d - 4l * i - 2l * j;
    return u_.emplace(std::make_pair(i, j),
                      BinaryForm::zero(f_.poly().registry(), f_.xpair(),
                                       o > 0 ? static_cast<unsigned>(o) : 0u))
        .first->second;
  }
  return u_.emplace(std::make_pair(i, j),
                    transvectant(self_transvectant(i), f_, j))
      .first->second;
}

BinaryForm CovariantEvaluator::evaluate(const CovariantExpr& expr) {
  if (expr.d != f_.degree()) {
    throw DomainError(expr.name() + " is defined for degree " +
                      std::to_string(expr.d) + ", form has degree " +
                      std::to_string(f_.degree()));
  }
  if (expr.kind == CovariantExpr::Kind::kU) return u(expr.i, expr.j);
  const unsigned e = expr.d / 2;
  const BinaryForm a = mu(e, expr.i2, expr.j2) * u(expr.i, expr.j);
  const BinaryForm b = mu(e, expr.i, expr.j) * u(expr.i2, expr.j2);
  return BinaryForm(a.poly() - b.poly(), f_.xpair(), a.degree());
}

MembershipResult membership(const BinaryForm& f) {
  const unsigned d = f.degree();
  if (d % 2 != 0) throw DomainError("membership needs an even degree");
  const auto& reg = *f.poly().registry();
  for (std::size_t v = 0; v < reg.size(); ++v) {
    const std::string& name = reg.name(v);
    if (name == f.xpair().first || name == f.xpair().second) continue;
    if (f.poly().degree_in(name) > 0) {
      throw DomainError("membership needs concrete coefficients; found '" +
                        name + "'");
    }
  }
  MembershipResult result;
  if (d < 4) {
    // Every quadratic is the first power of itself; the constant form is
    // the zeroth power of any quadratic.
    result.member = true;
    return result;
  }
  CovariantEvaluator ev(f);
  for (const CovariantExpr& c : set_S(d)) {
    if (!ev.evaluate(c).is_zero()) {
      result.witness = c;
      return result;
    }
  }
  result.member = true;
  return result;
}

}  // namespace invforge
