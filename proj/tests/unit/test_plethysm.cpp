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

#include <gtest/gtest.h>

#include "invforge/alphamap.hpp"
#include "invforge/errors.hpp"
#include "invforge/plethysm.hpp"

namespace invforge {
namespace {

// Multisets of r values in {0..d} with sum k: weight-space dimensions.
long count_multisets(unsigned r, unsigned d, long k) {
  auto rec = [&](auto& self, unsigned left, unsigned max_part, long sum) -> long {
    if (left == 0) return sum == 0 ? 1 : 0;
    long total = 0;
    for (long v = 0; v <= static_cast<long>(max_part) && v <= sum; ++v) {
      total += self(self, left - 1, static_cast<unsigned>(v), sum - v);
    }
    return total;
  };
  if (k < 0) return 0;
  return rec(rec, r, d, k);
}

long mult_oracle(unsigned r, unsigned d, long m) {
  const long k = (static_cast<long>(r) * d - m) / 2;
  return count_multisets(r, d, k) - count_multisets(r, d, k - 1);
}

CharList chars(std::initializer_list<std::pair<const long, long>> e) {
  return CharList(CharList::Map(e));
}

TEST(CharList, Basics) {
  CharList c;
  c.add(4, 1);
  c.add(0, 2);
  c.add(4, -1);
  EXPECT_EQ(c.multiplicity(4), 0);
  EXPECT_EQ(c.entries().size(), 1u);
  EXPECT_EQ(c.dimension(), BigInt(2));
  EXPECT_TRUE(c.is_effective());
  const CharList v = chars({{2, 1}}) - chars({{2, 2}, {0, 1}});
  EXPECT_FALSE(v.is_effective());
  EXPECT_EQ(chars({{24, 1}, {20, 1}}).to_string(), "24:1 20:1");
}

TEST(PartitionsInBox, MatchesBruteForce) {
  for (unsigned rows = 0; rows <= 4; ++rows) {
    for (unsigned cols = 0; cols <= 5; ++cols) {
      for (long n = -1; n <= static_cast<long>(rows * cols) + 1; ++n) {
        // Partitions in a rows x cols box <-> multisets of `rows` values in 0..cols.
        EXPECT_EQ(partitions_in_box(n, rows, cols), BigInt(count_multisets(rows, cols, n)))
            << n << " " << rows << " " << cols;
      }
    }
  }
}

TEST(MultBinary, Examples) {
  EXPECT_EQ(mult_binary(2, 4, 8), 1);
  EXPECT_EQ(mult_binary(3, 8, 12), 2);
  EXPECT_EQ(mult_binary(3, 8, 22), 0);
  EXPECT_EQ(mult_binary(3, 8, 30), 0);
  EXPECT_THROW(mult_binary(3, 8, 13), DomainError);
}

TEST(MultBinary, MatchesWeightSpaceOracle) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned d = 0; d <= 8; ++d) {
      for (long m = static_cast<long>(r * d); m >= 0; m -= 2) {
        EXPECT_EQ(mult_binary(r, d, m), mult_oracle(r, d, m)) << r << " " << d << " " << m;
      }
    }
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_plethysm(3, 8),
            chars({{24, 1}, {20, 1}, {18, 1}, {16, 1}, {14, 1}, {12, 2},
                   {10, 1}, {8, 2}, {6, 1}, {4, 1}, {0, 1}}));
  EXPECT_EQ(decompose_s2(12), chars({{24, 1}, {20, 1}, {16, 1}, {12, 1}, {8, 1}, {4, 1}, {0, 1}}));
  EXPECT_EQ(decompose_s2(0), chars({{0, 1}}));
  EXPECT_EQ(decompose_plethysm(2, 4), decompose_s2(4));
}

TEST(Decompose, DimensionConservation) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned d = 0; d <= 10; ++d) {
      const CharList c = decompose_plethysm(r, d);
      EXPECT_TRUE(c.is_effective());
      EXPECT_EQ(c.dimension(), binomial(d + r, r)) << r << " " << d;
    }
  }
  for (unsigned k = 0; k <= 12; ++k) {
    EXPECT_EQ(decompose_s2(k).dimension(), BigInt((k + 1) * (k + 2) / 2));
  }
}

TEST(IdealCharacter, Examples) {
  const CharList c = ideal_character(3, 8);
  EXPECT_EQ(c, chars({{18, 1}, {14, 1}, {12, 1}, {10, 1}, {8, 1}, {6, 1}}));
  EXPECT_EQ(c.dimension(), BigInt(74));
  for (unsigned d = 2; d <= 12; d += 2) EXPECT_TRUE(ideal_character(2, d).empty());
  EXPECT_EQ(ideal_character(3, 4), chars({{6, 1}}));
  EXPECT_THROW(ideal_character(3, 5), DomainError);
  EXPECT_THROW(ideal_character(1, 4), DomainError);
}

TEST(IdealCharacter, EffectiveForSmallCases) {
  for (unsigned r = 2; r <= 5; ++r) {
    for (unsigned d = 2; d <= 10; d += 2) {
      EXPECT_TRUE(ideal_character(r, d).is_effective()) << r << " " << d;
    }
  }
}

TEST(IdealCharacter, DimensionEqualsAlphaKernel) {
  for (unsigned d : {4u, 6u, 8u}) {
    const ExactMatrix m = alpha_matrix(1, d, 3);
    const std::size_t kernel = m.cols() - exact_rank(m);
    EXPECT_EQ(ideal_character(3, d).dimension(), BigInt(static_cast<unsigned long>(kernel)))
        << d;
  }
}

TEST(M0, Examples) {
  EXPECT_TRUE(m0(1, 1).excluded);
  EXPECT_FALSE(m0(2, 1).excluded);
  EXPECT_EQ(m0(2, 1).value, 3);
  EXPECT_EQ(m0(3, 2).value, 6);
  EXPECT_EQ(m0(4, 4).value, 8);
  EXPECT_EQ(m0(5, 3).value, 10);
  EXPECT_THROW(m0(0, 1), DomainError);
  EXPECT_THROW(m0(1, 0), DomainError);
}

TEST(M0, IsCeiling) {
  for (long n = 1; n <= 12; ++n) {
    for (long e = 1; e <= 12; ++e) {
      // smallest integer >= (2n+1)e - n over e
      long v = 2 * n + 1 - n / e;
      EXPECT_GE(v * e, (2 * n + 1) * e - n);
      EXPECT_LT((v - 1) * e, (2 * n + 1) * e - n);
      EXPECT_EQ(m0(n, e).value, v);
    }
  }
}

}  // namespace
}  // namespace invforge
