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

#ifndef CTLSETS_TOLLS_HPP_
#define CTLSETS_TOLLS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/explicit_list.hpp"
#include "ctlsets/fourier_motzkin.hpp"
#include "ctlsets/linalg.hpp"
#include "ctlsets/linear.hpp"

namespace ctlsets {

// Tolls over E = {0..size-1}; entries outside `support` are zero.
struct TollVector {
  ElementSet support;
  RationalVector gamma;
};

struct CostOracle {
  std::function<Rational(const RationalVector&)> evaluate;
  // Empty when the cost provides no subgradients.
  std::function<std::optional<RationalVector>(const RationalVector&)>
      subgradient;
};

CostOracle LinearCost(RationalVector c);
// 1/2 sum_e r_e x_e^2 + sum_e a_e x_e, with r >= 0.
CostOracle QuadraticCost(RationalVector r, RationalVector a);

RationalVector ToRational(const StateVector& x);
// c(x) + gamma . x
Rational TolledCost(const CostOracle& cost, const TollVector& tolls,
                    const RationalVector& x);

struct DiscreteTollOptions {
  // Added to M; any positive value makes the target the unique minimizer.
  Rational margin = 0;
  // Search gamma >= 0 by Fourier-Motzkin instead of using +-M.
  bool nonnegative = false;
  EliminationCaps caps;
};

// gamma_e = -M where target_e = 1 and +M where target_e = 0 for e in S,
// with M = max(1, 2 max_x |c(x)|) + margin. Requires binary states. Throws
// kNotBinary, kTargetNotInX, kNotIdentifying and, for the nonnegative
// variant, kNoNonnegativeTolls.
TollVector DiscreteTolls(const SolutionList& x, const ElementSet& s_set,
                         const CostOracle& cost, const StateVector& target,
                         const DiscreteTollOptions& options = {});

// Solves (xi - x0) . gamma = -d . (xi - x0) with gamma zero outside S, where
// d is a subgradient of the cost at the target. Throws kNotIdentifying,
// kTargetOutsideAffineHull and kNoSubgradient.
TollVector ConvexTolls(const AffineBasis& basis, const ElementSet& s_set,
                       const CostOracle& cost, const RationalVector& target);

struct ControllingVerdict {
  bool identifying = true;
  bool controlling = true;
  // When not identifying: two states that agree on S.
  std::pair<int, int> collision{-1, -1};
  // When not controlling: the first cost and target with no tolls, the
  // system gamma . (target - x)_S <= c(x) - c(target) over the other states
  // x (one row per state, in list order skipping the target), and Farkas
  // multipliers proving it infeasible.
  int cost_index = -1;
  int target_index = -1;
  std::vector<LinearInequality> system;
  std::vector<int> system_states;
  RationalVector farkas;
};

// Decides for each cost and each target state whether tolls on S can make
// the target a minimizer.
ControllingVerdict ControllingCounterexampleCheck(
    const SolutionList& x, const ElementSet& s_set,
    const std::vector<CostOracle>& costs, const EliminationCaps& caps = {});

}  // namespace ctlsets

#endif  // CTLSETS_TOLLS_HPP_
