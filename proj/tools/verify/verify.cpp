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

#include "verify.hpp"

#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <sstream>

#include "invforge/invforge.hpp"

namespace invforge::verify {

namespace {

using Detail = std::ostringstream;

RegistryPtr xy_registry() {
  static const RegistryPtr reg = VarRegistry::create({"x0", "x1"});
  return reg;
}

// Collects the first few failure notes; passes iff none were recorded.
class Tally {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  void count() { ++checks_; }
  bool passed() const { return failures_ == 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    if (failures_ > 0) os << ", " << failures_ << " failed: " << notes_.str();
    return os.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::string idx(std::initializer_list<long> v) {
  std::string s = "(";
  bool first = true;
  for (long x : v) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

bool c1_power_formula(std::string& detail) {
  const RegistryPtr reg = VarRegistry::create({"q0", "q1", "q2", "x0", "x1"});
  const BinaryForm q = generic_form(reg, "q", 2);
  Tally t;
  for (long p = 0; p <= 4; ++p) {
    for (long r = 0; r <= 4; ++r) {
      const BinaryForm qp = q.pow(p), qr = q.pow(r);
      for (long k = 0; k <= 2 * std::min(p, r); ++k) {
        t.count();
        const BinaryForm lhs = transvectant(qp, qr, k);
        const BinaryForm rhs = transvectant_power_closed(p, r, k, q);
        if (!(lhs.poly() == rhs.poly())) t.fail("p,q,k=" + idx({p, r, k}));
      }
    }
  }
  detail = t.summary();
  return t.passed();
}

bool c2_double_count(std::string& detail) {
  Tally t;
  for (long e = 0; e <= 4; ++e) {
    for (long p = 0; p <= e; ++p) {
      t.count();
      const Rational brute = n1_brute(e, p);
      const BigInt ratio = factorial(2 * e) / factorial(2 * e - 2 * p);
      const Rational direct = Rational(ratio * ratio) * n2(e, e, p);
      if (!(brute == n1_closed(e, p) && brute == direct)) {
        t.fail("e,p=" + idx({e, p}) + " brute=" + brute.to_string() +
               " closed=" + direct.to_string());
      }
    }
  }
  detail = t.summary();
  return t.passed();
}

bool c3_dixon(std::string& detail) {
  Tally t;
  for (long q = 0; q <= 6; ++q) {
    for (long p = 0; p <= q; ++p) {
      for (long k = 0; k <= 2 * p; ++k) {
        t.count();
        Rational lhs, rhs;
        if (k <= p) {
          lhs = f32_term(-k, -p, -q, p - k + 1, q - k + 1);
          rhs = dixon_rhs(-k, -p, -q);
        } else {
          lhs = f32_term(-2 * p + k, -p, -p - q + k, k - p + 1, q - p + 1);
          rhs = dixon_rhs(-2 * p + k, -p, -p - q + k);
        }
        if (!(lhs == rhs)) {
          t.fail("p,q,k=" + idx({p, q, k}) + " " + lhs.to_string() +
                 " vs " + rhs.to_string());
        }
      }
    }
  }
  for (long s = 0; s <= 12; ++s) {
    for (long p = 0; p <= 6; ++p) {
      t.count();
      if (!(j_sum(s, p) == j_closed(s, p))) t.fail("J s,p=" + idx({s, p}));
    }
  }
  detail = t.summary();
  return t.passed();
}

bool c4_bracket(std::string& detail) {
  Tally t;
  for (unsigned r = 2; r <= 3; ++r) {
    for (unsigned e = 1; e <= 2; ++e) {
      std::map<std::pair<unsigned, unsigned>, bool> nonzero;
      for (unsigned pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
        for (unsigned p = 0; 2 * p <= r * e; ++p) {
          t.count();
          const Poly direct = g_direct(r, e, p, pp);
          nonzero[{p, pp}] = !direct.is_zero();
          if (!(direct == g_closed(r, e, p, pp))) {
            t.fail("r,e,p,p'=" + idx({r, e, p, pp}));
          }
        }
        t.count();
        if (!nonzero[{g_witness(r, e, pp), pp}]) {
          t.fail("witness r,e,p'=" + idx({r, e, pp}) + " vanishes");
        }
      }
    }
  }
  detail = t.summary();
  return t.passed();
}

bool c5_surjectivity(std::string& detail) {
  Tally t;
  std::ostringstream ranks;
  auto check = [&](unsigned n, unsigned d, unsigned r, long expected) {
    t.count();
    const ExactMatrix m = alpha_matrix(n, d, r);
    const long rank = static_cast<long>(exact_rank(m));
    ranks << (ranks.tellp() > 0 ? " " : "") << "(" << n << "," << d << "," << r
          << ")=" << rank;
    if (rank != expected) {
      t.fail("rank" + idx({n, d, r}) + "=" + std::to_string(rank) +
             ", expected " + std::to_string(expected));
    }
    return m;
  };
  for (unsigned d : {4u, 6u, 8u}) {
    for (unsigned r : {2u, 3u}) {
      const long re = static_cast<long>(r) * (d / 2);
      check(1, d, r, (re + 1) * (re + 2) / 2);
    }
  }
  const ExactMatrix iso = check(1, 4, 2, 15);
  t.count();
  if (iso.rows() != 15 || iso.cols() != 15) t.fail("alpha(1,4,2) is not 15x15");
  check(2, 4, 2, 120);
  detail = t.summary("ranks " + ranks.str());
  return t.passed();
}

bool c6_magic_squares(std::string& detail) {
  Tally t;
  for (unsigned r = 2; r <= 4; ++r) {
    for (unsigned e = 1; e <= 2; ++e) {
      for (unsigned p = 0; 2 * p <= r * e; ++p) {
        t.count();
        if (tau(r, e, p).is_zero()) t.fail("tau" + idx({r, e, p}) + " = 0");
        if (r <= 3) {
          t.count();
          if (!tau_transvectant_check(r, e, p)) {
            t.fail("transvectant identity" + idx({r, e, p}));
          }
        }
      }
    }
  }
  t.count();
  const Poly expected = Poly::parse("-z1^2 + 2*z1*z2 - z2^2", tau_registry(2));
  if (!(tau(2, 1, 1) == expected)) t.fail("tau(2,1,1)");
  detail = t.summary();
  return t.passed();
}

std::vector<Rational> random_coefficients(std::mt19937_64& rng, unsigned d) {
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<Rational> c;
  for (unsigned i = 0; i <= d; ++i) c.emplace_back(dist(rng));
  return c;
}

bool c7_membership(std::string& detail) {
  Tally t;
  // Symbolic (L1 L2)^e.
  const RegistryPtr lreg =
      VarRegistry::create({"a0", "a1", "b0", "b1", "x0", "x1"});
  const BinaryForm l1 = linear_form(lreg, "a0", "a1");
  const BinaryForm l2 = linear_form(lreg, "b0", "b1");
  for (unsigned d : {4u, 6u, 8u}) {
    CovariantEvaluator ev((l1 * l2).pow(d / 2));
    for (const CovariantExpr& c : set_S(d)) {
      t.count();
      if (!ev.evaluate(c).is_zero()) t.fail(c.name() + " on (L1L2)^" + std::to_string(d / 2));
    }
  }
  // Random non-members, confirmed by exact root extraction.
  std::mt19937_64 rng(20261014);
  long witnesses = 0;
  for (unsigned d : {4u, 6u, 8u}) {
    int found = 0;
    while (found < 20) {
      const BinaryForm f = concrete_form(random_coefficients(rng, d));
      if (f.is_zero() || quadratic_root(f, d / 2).has_value()) continue;
      ++found;
      t.count();
      const MembershipResult m = membership(f);
      if (m.member || !m.witness) {
        t.fail("non-member judged member: " + f.poly().to_string());
      } else {
        ++witnesses;
      }
    }
  }
  // Quintic identity (F,(F,F)_2)_5 = 0.
  {
    const RegistryPtr reg =
        VarRegistry::create({"f0", "f1", "f2", "f3", "f4", "f5", "x0", "x1"});
    const BinaryForm f = generic_form(reg, "f", 5);
    t.count();
    if (!transvectant(f, transvectant(f, f, 2), 5).is_zero()) t.fail("quintic identity");
  }
  // Octavic proportionality.
  {
    std::vector<std::string> names = coefficient_names("f", 8);
    names.push_back("x0");
    names.push_back("x1");
    const RegistryPtr reg = VarRegistry::create(names);
    CovariantEvaluator ev(generic_form(reg, "f", 8));
    struct Case {
      CovariantExpr phi;
      long a;
      unsigned ia, ja;
      long b;
      unsigned ib, jb;
    };
    const Case cases[] = {
        {CovariantExpr::phi(8, 0, 6, 1, 4), 13, 0, 6, 63, 1, 4},
        {CovariantExpr::phi(8, 0, 8, 1, 6), 195, 0, 8, 2744, 1, 6},
    };
    for (const Case& c : cases) {
      t.count();
      const Poly phi = ev.evaluate(c.phi).poly();
      const Poly combo = ev.u(c.ia, c.ja).poly() * Rational(c.a) -
                         ev.u(c.ib, c.jb).poly() * Rational(c.b);
      if (combo.is_zero() || phi.is_zero()) {
        t.fail(c.phi.name() + " degenerate");
        continue;
      }
      const auto& [mono, coeff] = *combo.terms().begin();
      const Rational scale = phi.coefficient(mono) / coeff;
      if (scale.is_zero() || !(phi == combo * scale)) {
        t.fail(c.phi.name() + " not proportional");
      }
    }
  }
  // Preset members do not vanish on x0^5 x1^3.
  {
    CovariantEvaluator ev(BinaryForm(Poly::parse("x0^5*x1^3", xy_registry()), kX, 8));
    for (const CovariantExpr& c : octavic_preset()) {
      t.count();
      if (ev.evaluate(c).is_zero()) t.fail(c.name() + " vanishes on x0^5*x1^3");
    }
  }
  detail = t.summary(std::to_string(witnesses) + " non-member witnesses");
  return t.passed();
}

bool c8_characters(std::string& detail) {
  Tally t;
  auto expect = [&](const std::string& what, const CharList& got,
                    const CharList::Map& want) {
    t.count();
    if (!(got == CharList(want))) t.fail(what + " = " + got.to_string());
  };
  expect("S_3(S_8)", decompose_plethysm(3, 8),
         {{24, 1}, {20, 1}, {18, 1}, {16, 1}, {14, 1}, {12, 2}, {10, 1},
          {8, 2}, {6, 1}, {4, 1}, {0, 1}});
  expect("S_2(S_12)", decompose_s2(12),
         {{24, 1}, {20, 1}, {16, 1}, {12, 1}, {8, 1}, {4, 1}, {0, 1}});
  expect("(I_X)_3, d=8", ideal_character(3, 8),
         {{18, 1}, {14, 1}, {12, 1}, {10, 1}, {8, 1}, {6, 1}});
  for (unsigned d : {4u, 6u, 8u}) {
    expect("(I_X)_2, d=" + std::to_string(d), ideal_character(2, d), {});
  }
  t.count();
  const ExactMatrix m = alpha_matrix(1, 4, 3);
  const BigInt kernel = BigInt(static_cast<unsigned long>(m.cols())) -
                        BigInt(static_cast<unsigned long>(exact_rank(m)));
  const BigInt dim = ideal_character(3, 4).dimension();
  if (kernel != dim) {
    t.fail("kernel " + kernel.get_str() + " vs character " + dim.get_str());
  }
  detail = t.summary();
  return t.passed();
}

bool c9_regularity(std::string& detail) {
  Tally t;
  for (long e = 2; e <= 4; ++e) {
    t.count();
    if (m0(1, e).value != 3) t.fail("m0(1," + std::to_string(e) + ")");
  }
  for (long n = 1; n <= 4; ++n) {
    for (long e = 1; e <= 4; ++e) {
      t.count();
      const Rational bound = Rational(2 * n + 1) - Rational(n, e);
      BigInt ceil;
      mpz_cdiv_q(ceil.get_mpz_t(), bound.numerator().get_mpz_t(),
                 bound.denominator().get_mpz_t());
      if (BigInt(m0(n, e).value) != ceil) t.fail("m0" + idx({n, e}));
    }
  }
  detail = t.summary();
  return t.passed();
}

using Body = bool (*)(std::string&);

Body body_for(int id) {
  switch (id) {
    case 1: return c1_power_formula;
    case 2: return c2_double_count;
    case 3: return c3_dixon;
    case 4: return c4_bracket;
    case 5: return c5_surjectivity;
    case 6: return c6_magic_squares;
    case 7: return c7_membership;
    case 8: return c8_characters;
    case 9: return c9_regularity;
    default: return nullptr;
  }
}

}  // namespace

const std::vector<Criterion>& desk_criteria() {
  static const std::vector<Criterion> list = {
      {1, "transvectant of powers of a quadratic", 10},
      {2, "multigraph sum vs closed form", 30},
      {3, "Dixon and Chu-Vandermonde sums", 5},
      {4, "bracket expression vs closed form", 60},
      {5, "alpha map rank", 300},
      {6, "transportation-matrix sums", 120},
      {7, "covariant membership", 180},
      {8, "plethysm characters", 10},
      {9, "regularity bound", 1},
  };
  return list;
}

CriterionResult run_criterion(int id) {
  CriterionResult out;
  out.id = id;
  const Body body = body_for(id);
  const auto& list = desk_criteria();
  if (body == nullptr || id < 1 || id > static_cast<int>(list.size())) {
    out.detail = "no such criterion";
    return out;
  }
  out.name = list[id - 1].name;
  out.limit_seconds = list[id - 1].limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.passed = body(out.detail);
  } catch (const std::exception& ex) {
    out.passed = false;
    out.detail = std::string("exception: ") + ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.within_time = out.seconds <= out.limit_seconds;
  return out;
}

std::vector<CriterionResult> run_desk_suite(
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : desk_criteria()) {
    results.push_back(run_criterion(c.id));
    if (on_result) on_result(results.back());
  }
  return results;
}

// ---------------------------------------------------------------------------

BinaryForm concrete_form(const std::vector<Rational>& coeffs) {
  const RegistryPtr reg = xy_registry();
  const unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
  Poly p(reg);
  for (unsigned i = 0; i <= d; ++i) {
    p += Poly::monomial(reg, {d - i, i}, coeffs[i]);
  }
  return BinaryForm(p, kX, d);
}

namespace {

using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t len) {
  Series out(len, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series power(const Series& a, unsigned e, std::size_t len) {
  Series out(len, Rational(0));
  out[0] = Rational(1);
  for (unsigned k = 0; k < e; ++k) out = multiply(out, a, len);
  return out;
}

}  // namespace

std::optional<BinaryForm> quadratic_root(const BinaryForm& f, unsigned e) {
  const unsigned d = f.degree();
  if (d != 2 * e || e == 0) throw DomainError("quadratic_root needs degree 2e, e >= 1");
  const Poly& poly = f.poly();
  const RegistryPtr reg = poly.registry();
  const std::size_t i0 = reg->index_of(f.xpair().first);
  const std::size_t i1 = reg->index_of(f.xpair().second);
  std::vector<Rational> c(d + 1, Rational(0));
  for (const auto& [mono, coeff] : poly.terms()) {
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (v != i0 && v != i1 && mono[v] != 0) {
        throw DomainError("quadratic_root needs concrete coefficients");
      }
    }
    c[mono[i1]] = coeff;
  }
  auto form_of = [&](const std::vector<Rational>& q) {
    Poly p(reg);
    for (unsigned i = 0; i <= 2; ++i) {
      Monomial m(reg->size(), 0);
      m[i0] = 2 - i;
      m[i1] = i;
      p += Poly::monomial(reg, m, q[i]);
    }
    return BinaryForm(p, f.xpair(), 2);
  };
  std::size_t k = 0;
  while (k <= d && c[k].is_zero()) ++k;
  if (k > d) return form_of({Rational(1), Rational(0), Rational(0)});
  if (k % e != 0) return std::nullopt;
  const std::size_t a = k / e;  // power of x1 dividing the root
  // g(t) = F(1,t) / (f_k t^k), monic; its e-th root has degree 2 - a.
  const std::size_t len = d - k + 1;
  Series g(len);
  for (std::size_t i = 0; i < len; ++i) g[i] = c[k + i] / c[k];
  const std::size_t root_len = 3 - a;
  Series h(root_len, Rational(0));
  h[0] = Rational(1);
  for (std::size_t n = 1; n < root_len; ++n) {
    const Series cur = power(h, e, n + 1);
    h[n] = (g[n] - cur[n]) / Rational(static_cast<long>(e));
  }
  // deg h^e = e(2-a) = deg g, so comparing len coefficients is exact.
  if (power(h, e, len) != g) return std::nullopt;
  std::vector<Rational> q(3, Rational(0));
  for (std::size_t j = 0; j < root_len; ++j) q[a + j] = h[j];
  return form_of(q);
}

}  // namespace invforge::verify
