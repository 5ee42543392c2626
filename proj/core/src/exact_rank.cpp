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

#include <utility>
#include <vector>

#include "invforge/alphamap.hpp"

namespace invforge {

std::size_t exact_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const BigInt den = m.at(i, j).denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& v = m.at(i, j);
      a[i][j] = v.numerator() * (lcm / v.denominator());
    }
  }

  std::size_t rank = 0;
  BigInt previous = 1;
  BigInt t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    std::size_t best_size = 0;
    for (std::size_t i = rank; i < rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const std::size_t size = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
      if (pivot == rows || size < best_size) {
        pivot = i;
        best_size = size;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);

    const BigInt& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        // (p * a_ij - f * a_rank,j) / previous, exact by Sylvester's identity
        t = p * a[i][j];
        t -= f * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace invforge
