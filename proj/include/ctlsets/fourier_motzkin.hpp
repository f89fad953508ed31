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

#ifndef CTLSETS_FOURIER_MOTZKIN_HPP_
#define CTLSETS_FOURIER_MOTZKIN_HPP_

#include <cstddef>
#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/linalg.hpp"

namespace ctlsets {

// coefficients . y <= bound
struct LinearInequality {
  RationalVector coefficients;
  Rational bound;
};

struct EliminationCaps {
  int max_variables = 8;
  std::size_t max_rows = 20000;
};

struct EliminationResult {
  bool feasible = false;
  // A feasible point; coordinates are pulled towards zero.
  RationalVector solution;
  // When infeasible: nonnegative multipliers over the input rows whose
  // combination reads 0 <= negative.
  RationalVector farkas;
};

// Exact Fourier-Motzkin elimination. Throws kEliminationExplosion when the
// variable count or an intermediate system exceeds the caps.
EliminationResult SolveInequalities(const std::vector<LinearInequality>& rows,
                                    int variables,
                                    const EliminationCaps& caps = {});

}  // namespace ctlsets

#endif  // CTLSETS_FOURIER_MOTZKIN_HPP_
