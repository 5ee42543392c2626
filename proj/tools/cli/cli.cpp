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

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invforge/invforge.hpp"
#include "verify.hpp"

namespace invforge::cli {

namespace {

using json = nlohmann::ordered_json;

// A usage problem detected after CLI11 parsing; names the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_vars(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    if (b != std::string::npos) {
      const auto e = cur.find_last_not_of(" \t");
      out.push_back(cur.substr(b, e - b + 1));
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

RegistryPtr registry_with(std::vector<std::string> base, const std::string& extra) {
  for (auto& v : split_vars(extra)) base.push_back(std::move(v));
  return VarRegistry::create(std::move(base));
}

BinaryForm parse_form(const std::string& flag, const std::string& text,
                      const RegistryPtr& reg) {
  Poly p = Poly::parse(text, reg);
  const unsigned long deg = p.degree_in(kX.as_vector());
  if (!p.is_homogeneous_in(kX.as_vector(), deg)) {
    throw DomainError(flag + ": polynomial is not homogeneous in x0, x1");
  }
  return BinaryForm(std::move(p), kX, static_cast<unsigned>(deg));
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& ex) {
    throw UsageError(flag + ": " + ex.what());
  }
}

std::size_t size_cap_from_env() {
  const char* raw = std::getenv("INVFORGE_SIZE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSizeCap;
  const std::string s(raw);
  unsigned long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw UsageError("INVFORGE_SIZE_CAP: expected a positive integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

json char_list_json(const CharList& c) {
  json list = json::array();
  for (auto it = c.entries().rbegin(); it != c.entries().rend(); ++it) {
    list.push_back(std::to_string(it->first) + ":" + std::to_string(it->second));
  }
  const BigInt dim = c.dimension();
  return json{{"decomposition", list}, {"dimension", dim.get_str()}};
}

json matrix_json(unsigned size, const std::function<unsigned(unsigned, unsigned)>& at) {
  json rows = json::array();
  for (unsigned i = 0; i < size; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < size; ++j) row.push_back(at(i, j));
    rows.push_back(row);
  }
  return rows;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Flag values, shared across subcommands by name.
struct Flags {
  std::string a, b, f, g, name, vars, level = "desk", export_path;
  std::string ra, rb, rc, rd, re;  // rational flags of f32 / dixon
  unsigned k = 0, n = 0, d = 0, r = 0, e = 0, p = 0, pprime = 0, s2 = 0;
  long lp = 0, lq = 0, lk = 0, lm = 0, ls = 0, lr = 0, le = 0, lpp = 0, ln = 0;
  bool brute = false, closed = false, list = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with binary forms, transvectants and covariants",
               "invforge"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  Flags fl;
  std::map<CLI::App*, std::function<void()>> actions;

  auto nonneg = CLI::NonNegativeNumber;

  // transvect
  {
    auto* c = app.add_subcommand("transvect", "Transvectant (A,B)_k of two binary forms");
    c->add_option("--a", fl.a, "First form in x0, x1")->required();
    c->add_option("--b", fl.b, "Second form in x0, x1")->required();
    c->add_option("--k", fl.k, "Order k")->required()->check(nonneg);
    c->add_option("--vars", fl.vars, "Extra symbolic coefficient names, comma separated");
    actions[c] = [&] {
      const RegistryPtr reg = registry_with({"x0", "x1"}, fl.vars);
      const BinaryForm a = parse_form("--a", fl.a, reg);
      const BinaryForm b = parse_form("--b", fl.b, reg);
      emit(out, json{{"result", transvectant(a, b, fl.k).poly().to_string()}});
    };
  }
  // pi-p
  {
    auto* c = app.add_subcommand("pi-p", "Omega^{2p} G with y := x, unnormalised");
    c->add_option("--g", fl.g, "Polynomial in x0, x1, y0, y1")->required();
    c->add_option("--p", fl.p, "Index p")->required()->check(nonneg);
    c->add_option("--vars", fl.vars, "Extra symbolic coefficient names, comma separated");
    actions[c] = [&] {
      const RegistryPtr reg = registry_with({"x0", "x1", "y0", "y1"}, fl.vars);
      const Poly g = Poly::parse(fl.g, reg);
      const BinaryForm res = pi_p(g, kX, kY, fl.p);
      emit(out, json{{"result", res.poly().to_string()}, {"degree", res.degree()}});
    };
  }
  // alpha-rank
  {
    auto* c = app.add_subcommand("alpha-rank", "Exact rank of the alpha map matrix");
    c->add_option("--n", fl.n, "Projective dimension n")->required()->check(nonneg);
    c->add_option("--d", fl.d, "Even degree d")->required()->check(nonneg);
    c->add_option("--r", fl.r, "Symmetric power r")->required()->check(nonneg);
    c->add_option("--export", fl.export_path, "Write the matrix as text to this file");
    actions[c] = [&] {
      const std::size_t cap = size_cap_from_env();
      const ExactMatrix m = alpha_matrix(fl.n, fl.d, fl.r, cap);
      if (!fl.export_path.empty()) {
        std::ofstream file(fl.export_path);
        file << m.export_text();
        if (!file) throw DomainError("--export: cannot write '" + fl.export_path + "'");
      }
      emit(out, json{{"rows", m.rows()}, {"cols", m.cols()}, {"rank", exact_rank(m)}});
    };
  }
  // n1
  {
    auto* c = app.add_subcommand("n1", "Multigraph coefficient N^I(e,p)");
    c->add_option("--e", fl.e, "e")->required()->check(nonneg);
    c->add_option("--p", fl.p, "p")->required()->check(nonneg);
    auto* brute = c->add_flag("--brute", fl.brute, "Sum over multigraphs");
    auto* closed = c->add_flag("--closed", fl.closed, "Closed form");
    brute->excludes(closed);
    c->add_flag("--list", fl.list, "With --brute, print every multigraph as a JSON line");
    actions[c] = [&] {
      if (!fl.brute && !fl.closed) throw UsageError("--brute or --closed: one is required");
      if (fl.list && !fl.brute) throw UsageError("--list: only valid with --brute");
      if (fl.closed) {
        emit(out, json{{"e", fl.e}, {"p", fl.p}, {"method", "closed"},
                       {"value", n1_closed(fl.e, fl.p).to_string()}});
        return;
      }
      Rational total(0);
      long count = 0;
      for_each_multigraph(fl.e, fl.p, [&](const Multigraph& g) {
        ++count;
        const ComponentCensus cs = component_census(g);
        const bool admissible = cs.lr_chains == 0;
        const Rational w = multigraph_weight(g);
        if (admissible) total += w;
        if (fl.list) {
          emit(out, json{{"graph", matrix_json(g.e(), [&](unsigned i, unsigned j) {
                            return g.at(i, j);
                          })},
                         {"cycles", cs.cycles}, {"ll_chains", cs.ll_chains},
                         {"rr_chains", cs.rr_chains}, {"lr_chains", cs.lr_chains},
                         {"weight", w.to_string()}, {"admissible", admissible}});
        }
      });
      emit(out, json{{"e", fl.e}, {"p", fl.p}, {"method", "brute"}, {"graphs", count},
                     {"value", total.to_string()}});
    };
  }
  // n2, n3, w, j
  {
    auto* c = app.add_subcommand("n2", "Closed-form coefficient N^II(p,q,m)");
    c->add_option("--p", fl.lp, "p")->required();
    c->add_option("--q", fl.lq, "q")->required();
    c->add_option("--m", fl.lm, "m")->required();
    actions[c] = [&] { emit(out, json{{"value", n2(fl.lp, fl.lq, fl.lm).to_string()}}); };
  }
  {
    auto* c = app.add_subcommand("n3", "Closed-form coefficient N^III(r,e,p',p)");
    c->add_option("--r", fl.lr, "r")->required();
    c->add_option("--e", fl.le, "e")->required();
    c->add_option("--pprime", fl.lpp, "p'")->required();
    c->add_option("--p", fl.lp, "p")->required();
    actions[c] = [&] {
      emit(out, json{{"value", n3(fl.lr, fl.le, fl.lpp, fl.lp).to_string()}});
    };
  }
  {
    auto* c = app.add_subcommand("w", "Alternating factorial sum W(p,q,k)");
    c->add_option("--p", fl.lp, "p")->required();
    c->add_option("--q", fl.lq, "q")->required();
    c->add_option("--k", fl.lk, "k")->required();
    actions[c] = [&] {
      json closed = nullptr;
      const long m = fl.lk / 2;
      if (fl.lk >= 0 && fl.lk % 2 == 0 && m <= std::min(fl.lp, fl.lq)) {
        closed = w_closed(fl.lp, fl.lq, m).to_string();
      }
      emit(out, json{{"sum", w_sum(fl.lp, fl.lq, fl.lk).to_string()}, {"closed", closed}});
    };
  }
  {
    auto* c = app.add_subcommand("j", "Chu-Vandermonde sum J(s,p)");
    c->add_option("--s", fl.ls, "s")->required();
    c->add_option("--p", fl.lp, "p")->required();
    actions[c] = [&] {
      emit(out, json{{"sum", j_sum(fl.ls, fl.lp).to_string()},
                     {"closed", j_closed(fl.ls, fl.lp).to_string()}});
    };
  }
  // f32, dixon
  {
    auto* c = app.add_subcommand("f32", "Terminating 3F2(a,b,c; d,e; 1)");
    c->add_option("--a", fl.ra, "a, a nonpositive integer")->required();
    c->add_option("--b", fl.rb, "b")->required();
    c->add_option("--c", fl.rc, "c")->required();
    c->add_option("--d", fl.rd, "d")->required();
    c->add_option("--e", fl.re, "e")->required();
    actions[c] = [&] {
      const Rational v = f32_term(parse_rational("--a", fl.ra), parse_rational("--b", fl.rb),
                                  parse_rational("--c", fl.rc), parse_rational("--d", fl.rd),
                                  parse_rational("--e", fl.re));
      emit(out, json{{"value", v.to_string()}});
    };
  }
  {
    auto* c = app.add_subcommand("dixon", "Gamma-product side of Dixon's theorem");
    c->add_option("--a", fl.ra, "a, a nonpositive integer")->required();
    c->add_option("--b", fl.rb, "b")->required();
    c->add_option("--c", fl.rc, "c")->required();
    actions[c] = [&] {
      const Rational v = dixon_rhs(parse_rational("--a", fl.ra), parse_rational("--b", fl.rb),
                                   parse_rational("--c", fl.rc));
      emit(out, json{{"value", v.to_string()}});
    };
  }
  // tau, tau-check, g-check
  {
    auto* c = app.add_subcommand("tau", "Transportation-matrix sum T(r,e,p)");
    c->add_option("--r", fl.r, "r")->required()->check(nonneg);
    c->add_option("--e", fl.e, "e")->required()->check(nonneg);
    c->add_option("--p", fl.p, "p")->required()->check(nonneg);
    c->add_flag("--list", fl.list, "Print every matrix as a JSON line");
    actions[c] = [&] {
      long count = 0;
      for_each_transport_matrix(fl.r, fl.e, fl.p, [&](const TransportMatrix& m) {
        ++count;
        if (fl.list) {
          emit(out, json{{"matrix", matrix_json(m.size(), [&](unsigned i, unsigned j) {
                            return m.at(i, j);
                          })}});
        }
      });
      emit(out, json{{"matrices", count}, {"result", tau(fl.r, fl.e, fl.p).to_string()}});
    };
  }
  {
    auto* c = app.add_subcommand("tau-check", "Compare T(r,e,p) with a transvectant");
    c->add_option("--r", fl.r, "r")->required()->check(nonneg);
    c->add_option("--e", fl.e, "e")->required()->check(nonneg);
    c->add_option("--p", fl.p, "p")->required()->check(nonneg);
    actions[c] = [&] {
      if (fl.r < 2 || fl.e < 1 || 2 * fl.p > fl.r * fl.e) {
        throw DomainError("tau-check needs r >= 2, e >= 1, 2p <= re");
      }
      emit(out, json{{"holds", tau_transvectant_check(fl.r, fl.e, fl.p)}});
    };
  }
  {
    auto* c = app.add_subcommand("g-check", "Direct bracket expression vs closed form");
    c->add_option("--r", fl.r, "r")->required()->check(nonneg);
    c->add_option("--e", fl.e, "e")->required()->check(nonneg);
    c->add_option("--p", fl.p, "p")->required()->check(nonneg);
    c->add_option("--pprime", fl.pprime, "p'")->required()->check(nonneg);
    actions[c] = [&] {
      const Poly direct = g_direct(fl.r, fl.e, fl.p, fl.pprime);
      const Poly closed = g_closed(fl.r, fl.e, fl.p, fl.pprime);
      emit(out, json{{"direct", direct.to_string()}, {"closed", closed.to_string()},
                     {"n3", n3(fl.r, fl.e, fl.pprime, fl.p).to_string()},
                     {"equal", direct == closed}});
    };
  }
  // covariant, membership
  {
    auto* c = app.add_subcommand("covariant", "Evaluate U(i,j) or Phi(i,j,i',j') on a form");
    c->add_option("--d", fl.d, "Even degree d")->required()->check(nonneg);
    c->add_option("--f", fl.f, "Form of degree d in x0, x1")->required();
    c->add_option("--name", fl.name, "U(i,j) or Phi(i,j,i',j')")->required();
    c->add_option("--vars", fl.vars, "Extra symbolic coefficient names, comma separated");
    actions[c] = [&] {
      const RegistryPtr reg = registry_with({"x0", "x1"}, fl.vars);
      BinaryForm f = parse_form("--f", fl.f, reg);
      if (f.is_zero()) f = BinaryForm::zero(reg, kX, fl.d);
      if (f.degree() != fl.d) {
        throw DomainError("--f: form has degree " + std::to_string(f.degree()) +
                          ", --d is " + std::to_string(fl.d));
      }
      const CovariantExpr expr = CovariantExpr::parse(fl.name, fl.d);
      CovariantEvaluator ev(f);
      emit(out, json{{"name", expr.name()}, {"order", expr.order()},
                     {"result", ev.evaluate(expr).poly().to_string()}});
    };
  }
  {
    auto* c = app.add_subcommand("membership", "Is F the e-th power of a quadratic?");
    c->add_option("--d", fl.d, "Even degree d")->required()->check(nonneg);
    c->add_option("--f", fl.f, "Form of degree d with rational coefficients")->required();
    actions[c] = [&] {
      const RegistryPtr reg = registry_with({"x0", "x1"}, "");
      BinaryForm f = parse_form("--f", fl.f, reg);
      if (f.is_zero()) f = BinaryForm::zero(reg, kX, fl.d);
      if (f.degree() != fl.d) {
        throw DomainError("--f: form has degree " + std::to_string(f.degree()) +
                          ", --d is " + std::to_string(fl.d));
      }
      const MembershipResult m = membership(f);
      emit(out, json{{"member", m.member},
                     {"witness", m.witness ? json(m.witness->name()) : json(nullptr)}});
    };
  }
  // plethysm, ideal-char, m0
  {
    auto* c = app.add_subcommand("plethysm", "Decompose S_r(S_d C^2), or S_2(S_k) with --s2");
    auto* r = c->add_option("--r", fl.r, "r")->check(nonneg);
    auto* d = c->add_option("--d", fl.d, "d")->check(nonneg);
    auto* s2 = c->add_option("--s2", fl.s2, "Decompose S_2(S_k) for this k")->check(nonneg);
    s2->excludes(r)->excludes(d);
    actions[c] = [&, r, d, s2] {
      if (s2->count() > 0) {
        emit(out, char_list_json(decompose_s2(fl.s2)));
        return;
      }
      if (r->count() == 0) throw UsageError("--r: required unless --s2 is given");
      if (d->count() == 0) throw UsageError("--d: required unless --s2 is given");
      emit(out, char_list_json(decompose_plethysm(fl.r, fl.d)));
    };
  }
  {
    auto* c = app.add_subcommand("ideal-char", "Character of the degree-r part of the ideal");
    c->add_option("--r", fl.r, "r")->required()->check(nonneg);
    c->add_option("--d", fl.d, "Even degree d")->required()->check(nonneg);
    actions[c] = [&] { emit(out, char_list_json(ideal_character(fl.r, fl.d))); };
  }
  {
    auto* c = app.add_subcommand("m0", "Regularity bound ceil(2n+1-n/e)");
    c->add_option("--n", fl.ln, "n")->required();
    c->add_option("--e", fl.le, "e")->required();
    actions[c] = [&] {
      const M0Result m = m0(fl.ln, fl.le);
      emit(out, json{{"value", m.value}, {"excluded", m.excluded}});
    };
  }
  // verify-all
  int verify_status = kExitOk;
  {
    auto* c = app.add_subcommand("verify-all", "Run the acceptance suite");
    c->add_option("--level", fl.level, "Suite level")->check(CLI::IsMember({"desk"}));
    actions[c] = [&] {
      json criteria = json::array();
      bool all = true;
      for (const auto& res : verify::run_desk_suite()) {
        all = all && res.ok();
        criteria.push_back(json{{"id", res.id}, {"name", res.name}, {"passed", res.ok()},
                                {"detail", res.within_time
                                               ? res.detail
                                               : res.detail + " (time limit exceeded)"}});
      }
      emit(out, json{{"level", fl.level}, {"passed", all}, {"criteria", criteria}});
      if (!all) verify_status = kExitDomain;
    };
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    // Subcommand help requests also arrive here.
    if (ex.get_exit_code() == 0) {
      out << ex.what() << '\n';
      return kExitOk;
    }
    err << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    for (auto& [sub, action] : actions) {
      if (sub->parsed()) {
        action();
        return verify_status;
      }
    }
    err << "usage error: no subcommand given\n";
    return kExitUsage;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& ex) {
    err << json{{"error", ex.what()}}.dump() << '\n';
    return kExitDomain;
  } catch (const std::exception& ex) {
    err << json{{"error", ex.what()}}.dump() << '\n';
    return kExitDomain;
  }
}

}  // namespace invforge::cli
