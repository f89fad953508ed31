// Copyright 2026 The ctlsets Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctlsets/linalg.hpp"

#include <utility>

namespace ctlsets {

std::vector<int> ReduceRowEchelon(RationalMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Rank(RationalMatrix m) {
  return static_cast<int>(ReduceRowEchelon(m).size());
}

std::optional<RationalVector> NullspaceVector(RationalMatrix m, int columns) {
  const auto pivots = ReduceRowEchelon(m);
  std::vector<char> is_pivot(columns, 0);
  for (int c : pivots) is_pivot[c] = 1;
  int free_col = -1;
  for (int c = 0; c < columns; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;
  RationalVector v(columns, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    v[pivots[r]] = -m[r][free_col];
  }
  return v;
}

std::optional<RationalVector> SolveLinearSystem(RationalMatrix m,
                                                const RationalVector& rhs,
                                                int columns) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  const auto pivots = ReduceRowEchelon(m);
  RationalVector x(columns, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == columns) return std::nullopt;  // 0 = nonzero
    x[pivots[r]] = m[r][columns];
  }
  return x;
}

RationalMatrix Transpose(const RationalMatrix& m, int columns) {
  RationalMatrix t(columns, RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int j = 0; j < columns; ++j) t[j][i] = m[i][j];
  }
  return t;
}

RationalVector Subtract(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RationalVector Canonical(RationalVector v) {
  for (auto& x : v) x.canonicalize();
  return v;
}

}  // namespace ctlsets
