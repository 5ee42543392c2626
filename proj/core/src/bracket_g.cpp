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

#include "invforge/closedform.hpp"
#include "invforge/enumerate.hpp"
#include "invforge/errors.hpp"
#include "invforge/transvect.hpp"

namespace invforge {

namespace {

void check_ranges(unsigned r, unsigned e, unsigned p, unsigned pprime) {
  if (r < 2 || e < 1 || 2 * pprime > (r + 1) * e || 2 * p > r * e) {
    throw DomainError("indices need r >= 2, e >= 1, 2p' <= (r+1)e, 2p <= re");
  }
}

RegistryPtr g_work_registry() {
  static const RegistryPtr reg =
      VarRegistry::create({"a0", "a1", "b0", "b1", "x0", "x1", "y0", "y1"});
  return reg;
}

}  // namespace

RegistryPtr g_registry() {
  static const RegistryPtr reg =
      VarRegistry::create({"a0", "a1", "b0", "b1", "x0", "x1"});
  return reg;
}

Poly g_direct(unsigned r, unsigned e, unsigned p, unsigned pprime) {
  check_ranges(r, e, p, pprime);
  const RegistryPtr w = g_work_registry();
  auto v = [&](const char* name) { return Poly::variable(w, name); };
  const Poly xy = v("x0") * v("y1") - v("x1") * v("y0");
  const Poly ax = v("a0") * v("x0") + v("a1") * v("x1");
  const Poly ay = v("a0") * v("y0") + v("a1") * v("y1");
  const Poly bx = v("b0") * v("x0") + v("b1") * v("x1");
  const Poly by = v("b0") * v("y0") + v("b1") * v("y1");
  const unsigned rest = r * e - 2 * p;
  const Poly body =
      xy.pow(2 * p) * (ax * ay).pow(rest) * (bx * by).pow(e);
  const Poly applied = omega_apply(body, kX, kY, 2 * pprime);

  const RegistryPtr out = g_registry();
  std::map<std::string, Poly> diagonal;
  for (const char* name : {"a0", "a1", "b0", "b1", "x0", "x1"}) {
    diagonal.emplace(name, Poly::variable(out, name));
  }
  diagonal.emplace("y0", Poly::variable(out, "x0"));
  diagonal.emplace("y1", Poly::variable(out, "x1"));
  return applied.substitute(diagonal);
}

Poly g_closed(unsigned r, unsigned e, unsigned p, unsigned pprime) {
  check_ranges(r, e, p, pprime);
  const RegistryPtr out = g_registry();
  const Rational c = n3(r, e, pprime, p);
  if (c.is_zero()) return Poly(out);
  auto v = [&](const char* name) { return Poly::variable(out, name); };
  const Poly ax = v("a0") * v("x0") + v("a1") * v("x1");
  const Poly bx = v("b0") * v("x0") + v("b1") * v("x1");
  const Poly ab = v("a0") * v("b1") - v("a1") * v("b0");
  const long re = static_cast<long>(r) * e;
  const long pp = pprime, q = p;
  return ax.pow(2 * (re - pp - q)) * bx.pow(2 * (e - pp + q)) *
         ab.pow(2 * (pp - q)) * c;
}

unsigned g_witness(unsigned r, unsigned e, unsigned pprime) {
  if (r < 2 || e < 1 || 2 * pprime > (r + 1) * e) {
    throw DomainError("witness needs r >= 2, e >= 1, 2p' <= (r+1)e");
  }
  return 2 * pprime <= r * e ? pprime : pprime - e;
}

}  // namespace invforge
