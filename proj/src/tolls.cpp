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

#include "ctlsets/tolls.hpp"

#include <string>
#include <utility>

namespace ctlsets {
namespace {

std::vector<LinearInequality> TargetSystem(const SolutionList& x,
                                           const ElementSet& s,
                                           const std::vector<Rational>& values,
                                           int target,
                                           std::vector<int>* states) {
  std::vector<LinearInequality> rows;
  for (int i = 0; i < x.size(); ++i) {
    if (i == target) continue;
    LinearInequality row;
    for (int e : s) row.coefficients.push_back(Rational(x[target][e] - x[i][e]));
    row.bound = values[i] - values[target];
    rows.push_back(std::move(row));
    if (states) states->push_back(i);
  }
  return rows;
}

std::vector<Rational> Evaluate(const SolutionList& x, const CostOracle& cost) {
  std::vector<Rational> values;
  for (const auto& v : x.vectors()) values.push_back(cost.evaluate(ToRational(v)));
  return values;
}

}  // namespace

CostOracle LinearCost(RationalVector c) {
  c = Canonical(std::move(c));
  CostOracle cost;
  cost.evaluate = [c](const RationalVector& x) { return Dot(c, x); };
  cost.subgradient = [c](const RationalVector&) {
    return std::optional<RationalVector>(c);
  };
  return cost;
}

CostOracle QuadraticCost(RationalVector r, RationalVector a) {
  if (r.size() != a.size()) {
    throw Error(ErrorCode::kInvalidParams, "coefficient vectors differ in size");
  }
  r = Canonical(std::move(r));
  a = Canonical(std::move(a));
  for (const auto& v : r) {
    if (v < 0) throw Error(ErrorCode::kInvalidParams, "negative resistance");
  }
  CostOracle cost;
  cost.evaluate = [r, a](const RationalVector& x) {
    Rational total = 0;
    for (std::size_t e = 0; e < x.size(); ++e) {
      total += r[e] * x[e] * x[e] / 2 + a[e] * x[e];
    }
    return total;
  };
  cost.subgradient = [r, a](const RationalVector& x) {
    RationalVector g(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) g[e] = r[e] * x[e] + a[e];
    return std::optional<RationalVector>(g);
  };
  return cost;
}

RationalVector ToRational(const StateVector& x) {
  RationalVector out;
  out.reserve(x.size());
  for (int v : x) out.emplace_back(v);
  return out;
}

Rational TolledCost(const CostOracle& cost, const TollVector& tolls,
                    const RationalVector& x) {
  return cost.evaluate(x) + Dot(tolls.gamma, x);
}

TollVector DiscreteTolls(const SolutionList& x, const ElementSet& s_set,
                         const CostOracle& cost, const StateVector& target,
                         const DiscreteTollOptions& options) {
  const int n = x.dimension();
  const ElementSet s = NormalizeSet(s_set, n);
  if (!x.IsBinary()) {
    throw Error(ErrorCode::kNotBinary, "discrete tolls need binary states");
  }
  const auto target_index = x.IndexOf(target);
  if (!target_index) {
    throw Error(ErrorCode::kTargetNotInX, "target is not a feasible state");
  }
  const auto check = VerifyExplicitIdentifying(x, s);
  if (!check.identifying) {
    throw Error(ErrorCode::kNotIdentifying,
                "states " + std::to_string(check.witness.first) + " and " +
                    std::to_string(check.witness.second) + " agree on S");
  }
  const auto values = Evaluate(x, cost);
  TollVector tolls{s, RationalVector(n, Rational(0))};

  if (options.nonnegative) {
    auto rows = TargetSystem(x, s, values, *target_index, nullptr);
    for (std::size_t j = 0; j < s.size(); ++j) {
      LinearInequality row{RationalVector(s.size(), Rational(0)), Rational(0)};
      row.coefficients[j] = -1;
      rows.push_back(std::move(row));
    }
    const auto solved =
        SolveInequalities(rows, static_cast<int>(s.size()), options.caps);
    if (!solved.feasible) {
      throw Error(ErrorCode::kNoNonnegativeTolls,
                  "no nonnegative tolls make the target a minimizer");
    }
    for (std::size_t j = 0; j < s.size(); ++j) tolls.gamma[s[j]] = solved.solution[j];
    return tolls;
  }

  Rational big = 0;
  for (const auto& v : values) {
    if (2 * abs(v) > big) big = 2 * abs(v);
  }
  if (big < 1) big = 1;
  big += options.margin;
  for (int e : s) tolls.gamma[e] = target[e] == 1 ? -big : big;
  return tolls;
}

TollVector ConvexTolls(const AffineBasis& basis, const ElementSet& s_set,
                       const CostOracle& cost, const RationalVector& target_in) {
  const RationalVector target = Canonical(target_in);
  const int n = basis.dimension();
  const ElementSet s = NormalizeSet(s_set, n);
  if (!VerifyIdentifyingFromBasis(basis, s).identifying) {
    throw Error(ErrorCode::kNotIdentifying, "E \\ S is dependent in A_X");
  }
  if (!basis.InAffineHull(target)) {
    throw Error(ErrorCode::kTargetOutsideAffineHull,
                "target is outside the affine hull of the basis");
  }
  std::optional<RationalVector> d;
  if (cost.subgradient) d = cost.subgradient(target);
  if (!d || static_cast<int>(d->size()) != n) {
    throw Error(ErrorCode::kNoSubgradient, "no subgradient at the target");
  }
  const Rational at_target = cost.evaluate(target);
  for (const auto& z : basis.points()) {
    if (cost.evaluate(z) < at_target + Dot(*d, Subtract(z, target))) {
      throw Error(ErrorCode::kNoSubgradient,
                  "subgradient inequality fails at a basis point");
    }
  }

  RationalMatrix system;
  RationalVector rhs;
  for (const auto& diff : basis.differences()) {
    RationalVector row;
    for (int e : s) row.push_back(diff[e]);
    system.push_back(std::move(row));
    rhs.push_back(-Dot(*d, diff));
  }
  const auto gamma_s =
      SolveLinearSystem(system, rhs, static_cast<int>(s.size()));
  // E \ S independent means the rows restricted to S are independent.
  TollVector tolls{s, RationalVector(n, Rational(0))};
  for (std::size_t j = 0; j < s.size(); ++j) tolls.gamma[s[j]] = (*gamma_s)[j];
  return tolls;
}

ControllingVerdict ControllingCounterexampleCheck(
    const SolutionList& x, const ElementSet& s_set,
    const std::vector<CostOracle>& costs, const EliminationCaps& caps) {
  const ElementSet s = NormalizeSet(s_set, x.dimension());
  if (static_cast<int>(s.size()) > caps.max_variables) {
    throw Error(ErrorCode::kEliminationExplosion, "S is too large to eliminate");
  }
  ControllingVerdict verdict;
  const auto check = VerifyExplicitIdentifying(x, s);
  verdict.identifying = check.identifying;
  verdict.collision = check.witness;
  for (std::size_t c = 0; c < costs.size(); ++c) {
    const auto values = Evaluate(x, costs[c]);
    for (int t = 0; t < x.size(); ++t) {
      std::vector<int> states;
      auto rows = TargetSystem(x, s, values, t, &states);
      auto solved = SolveInequalities(rows, static_cast<int>(s.size()), caps);
      if (solved.feasible) continue;
      verdict.controlling = false;
      verdict.cost_index = static_cast<int>(c);
      verdict.target_index = t;
      verdict.system = std::move(rows);
      verdict.system_states = std::move(states);
      verdict.farkas = std::move(solved.farkas);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace ctlsets
