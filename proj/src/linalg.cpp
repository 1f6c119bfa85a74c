// Copyright 2026 The Authors.
//
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

#include "linalg.hpp"

#include <utility>

#include "tropical/error.hpp"

namespace tropical::linalg {
namespace {

// Reduces `rows` in place to row echelon form; returns the rank and the sign
// flips from row swaps.
std::pair<int, int> Eliminate(RationalMatrix& rows) {
  const std::size_t m = rows.size();
  const std::size_t cols = m == 0 ? 0 : rows[0].size();
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != r) {
      std::swap(rows[pivot], rows[r]);
      sign = -sign;
    }
    for (std::size_t k = r + 1; k < m; ++k) {
      if (rows[k][c] == 0) continue;
      Rational factor = rows[k][c] / rows[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) {
        rows[k][cc] -= factor * rows[r][cc];
      }
    }
    ++r;
  }
  return {static_cast<int>(r), sign};
}

}  // namespace

int Rank(RationalMatrix rows) { return Eliminate(rows).first; }

Rational Determinant(RationalMatrix rows) {
  const std::size_t m = rows.size();
  for (const auto& row : rows) {
    if (row.size() != m) {
      throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
    }
  }
  if (m == 0) return Rational(1);
  auto [rank, sign] = Eliminate(rows);
  if (rank < static_cast<int>(m)) return Rational(0);
  Rational det(sign);
  for (std::size_t i = 0; i < m; ++i) det *= rows[i][i];
  return det;
}

}  // namespace tropical::linalg
