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

#ifndef CTLSETS_LINALG_HPP_
#define CTLSETS_LINALG_HPP_

#include <optional>
#include <vector>

#include "ctlsets/core.hpp"

namespace ctlsets {

using RationalVector = std::vector<Rational>;
// Row-major dense matrix; all rows must have the same length.
using RationalMatrix = std::vector<RationalVector>;

// Reduced row echelon form computed in place with exact arithmetic.
// Returns the pivot column of each nonzero row.
std::vector<int> ReduceRowEchelon(RationalMatrix& m);

int Rank(RationalMatrix m);

// Some nonzero v with m * v = 0, or nullopt when the columns are
// independent. `columns` is needed for matrices with no rows.
std::optional<RationalVector> NullspaceVector(RationalMatrix m, int columns);

// Some solution of m * x = rhs (free variables set to zero), or nullopt
// when the system is inconsistent.
std::optional<RationalVector> SolveLinearSystem(RationalMatrix m,
                                                const RationalVector& rhs,
                                                int columns);

RationalMatrix Transpose(const RationalMatrix& m, int columns);
RationalVector Subtract(const RationalVector& a, const RationalVector& b);
Rational Dot(const RationalVector& a, const RationalVector& b);

// Reduces every entry to lowest terms. GMP comparisons assume this.
RationalVector Canonical(RationalVector v);

}  // namespace ctlsets

#endif  // CTLSETS_LINALG_HPP_
