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

#include "invforge/plethysm.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"

namespace invforge {

CharList::CharList(const Map& entries) {
  for (const auto& [w, m] : entries) add(w, m);
}

long CharList::multiplicity(long weight) const {
  const auto it = entries_.find(weight);
  return it == entries_.end() ? 0 : it->second;
}

void CharList::add(long weight, long multiplicity) {
  if (multiplicity == 0) return;
  const long v = (entries_[weight] += multiplicity);
  if (v == 0) entries_.erase(weight);
}

bool CharList::is_effective() const {
  for (const auto& [w, m] : entries_) {
    if (m < 0) return false;
  }
  return true;
}

BigInt CharList::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : entries_) total += BigInt(w + 1) * BigInt(m);
  return total;
}

std::string CharList::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (!first) os << ' ';
    first = false;
    os << it->first << ':' << it->second;
  }
  return os.str();
}

CharList operator-(const CharList& a, const CharList& b) {
  CharList out = a;
  for (const auto& [w, m] : b.entries_) out.add(w, -m);
  return out;
}

BigInt partitions_in_box(long n, unsigned rows, unsigned cols) {
  if (n < 0 || n > static_cast<long>(rows) * cols) return 0;
  // box[a][s]: partitions of s into at most a parts, each <= c, for the
  // current c. Either fewer than a parts, or exactly a parts with one
  // removed from each.
  std::vector<std::vector<BigInt>> box(rows + 1, std::vector<BigInt>(n + 1));
  for (auto& row : box) row[0] = 1;
  for (unsigned c = 1; c <= cols; ++c) {
    std::vector<std::vector<BigInt>> next = box;
    for (unsigned a = 1; a <= rows; ++a) {
      for (long s = 1; s <= n; ++s) {
        next[a][s] = next[a - 1][s];
        if (s >= static_cast<long>(a)) next[a][s] += box[a][s - a];
      }
    }
    box = std::move(next);
  }
  return box[rows][n];
}

long mult_binary(unsigned r, unsigned d, long m) {
  const long top = static_cast<long>(r) * d;
  if (((top - m) % 2 + 2) % 2 != 0) {
    throw DomainError("mult_binary needs m congruent to rd mod 2");
  }
  if (m < 0 || m > top) return 0;
  const long k = (top - m) / 2;
  const BigInt diff = partitions_in_box(k, r, d) - partitions_in_box(k - 1, r, d);
  if (!diff.fits_slong_p()) throw DomainError("multiplicity overflows long");
  return diff.get_si();
}

CharList decompose_plethysm(unsigned r, unsigned d) {
  CharList out;
  const long top = static_cast<long>(r) * d;
  for (long m = top; m >= 0; m -= 2) out.add(m, mult_binary(r, d, m));
  return out;
}

CharList decompose_s2(unsigned k) {
  CharList out;
  for (long p = 0; 2 * p <= static_cast<long>(k); ++p) out.add(2l * k - 4 * p, 1);
  return out;
}

CharList ideal_character(unsigned r, unsigned d) {
  if (d % 2 != 0) throw DomainError("ideal_character needs even d");
  if (r < 2) throw DomainError("ideal_character needs r >= 2");
  const CharList diff = decompose_plethysm(r, d) - decompose_s2(r * (d / 2));
  if (!diff.is_effective()) {
    throw DomainError("ideal_character(" + std::to_string(r) + "," +
                      std::to_string(d) + ") has a negative multiplicity: " +
                      diff.to_string());
  }
  return diff;
}

M0Result m0(long n, long e) {
  if (n < 1 || e < 1) throw DomainError("m0 needs n >= 1 and e >= 1");
  M0Result out;
  // ceil(2n+1 - n/e) = 2n+1 - floor(n/e) for positive n, e.
  out.value = 2 * n + 1 - n / e;
  out.excluded = (n == 1 && e == 1);
  return out;
}

}  // namespace invforge
