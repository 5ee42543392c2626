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
// Characters of SL_2-modules as finite lists of highest weights with
// multiplicities, and the n = 1 character bookkeeping for S_r(S_d).

#ifndef INVFORGE_PLETHYSM_HPP_
#define INVFORGE_PLETHYSM_HPP_

#include <map>
#include <string>

#include "invforge/arith.hpp"

namespace invforge {

// Highest weight -> multiplicity. Zero multiplicities are never stored;
// negative ones describe virtual characters.
class CharList {
 public:
  using Map = std::map<long, long>;

  CharList() = default;
  explicit CharList(const Map& entries);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  long multiplicity(long weight) const;
  void add(long weight, long multiplicity);
  bool is_effective() const;

  // sum (m+1) * multiplicity.
  BigInt dimension() const;

  // "24:1 20:1 ..." in descending weight order.
  std::string to_string() const;

  friend CharList operator-(const CharList& a, const CharList& b);
  friend bool operator==(const CharList&, const CharList&) = default;

 private:
  Map entries_;
};

// Partitions of n with at most `rows` parts, each at most `cols`.
BigInt partitions_in_box(long n, unsigned rows, unsigned cols);

// Multiplicity of S_m in S_r(S_d C^2). Throws DomainError when m and rd
// have different parity; zero outside 0 <= m <= rd.
long mult_binary(unsigned r, unsigned d, long m);

CharList decompose_plethysm(unsigned r, unsigned d);
// S_2(S_k) = sum_{p=0}^{floor(k/2)} S_{2k-4p}.
CharList decompose_s2(unsigned k);

// decompose_plethysm(r,d) - decompose_s2(r d/2). Requires d even, r >= 2;
// throws DomainError if a multiplicity would be negative.
CharList ideal_character(unsigned r, unsigned d);

struct M0Result {
  long value = 0;
  bool excluded = false;  // n = 1, e = 1
};

// ceil(2n + 1 - n/e). Requires n, e >= 1.
M0Result m0(long n, long e);

}  // namespace invforge

#endif  // INVFORGE_PLETHYSM_HPP_
