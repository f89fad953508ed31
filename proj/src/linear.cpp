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

#include "ctlsets/linear.hpp"

#include <algorithm>
#include <numeric>

namespace ctlsets {
namespace {

RationalVector UnitVector(int dimension, int e) {
  RationalVector v(dimension, Rational(0));
  v[e] = 1;
  return v;
}

RationalMatrix Rows(const AffineBasis& basis, const ElementSet& f_set) {
  RationalMatrix rows = basis.differences();
  for (int e : f_set) rows.push_back(UnitVector(basis.dimension(), e));
  return rows;
}

}  // namespace

AffineBasis::AffineBasis(std::vector<RationalVector> points)
    : points_(std::move(points)) {
  for (auto& p : points_) p = Canonical(std::move(p));
  if (points_.empty()) {
    throw Error(ErrorCode::kInvalidParams, "affine basis needs a point");
  }
  dimension_ = static_cast<int>(points_[0].size());
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dimension_) {
      throw Error(ErrorCode::kInvalidParams, "point dimensions differ");
    }
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    differences_.push_back(Subtract(points_[i], points_[0]));
  }
  if (Rank(differences_) != k()) {
    throw Error(ErrorCode::kInvalidParams, "points are affinely dependent");
  }
}

bool AffineBasis::InAffineHull(const RationalVector& point) const {
  if (static_cast<int>(point.size()) != dimension_) return false;
  if (k() == 0) return point == points_[0];
  return SolveLinearSystem(Transpose(differences_, dimension_),
                           Subtract(point, points_[0]), k())
      .has_value();
}

bool AxIndependent(const AffineBasis& basis, const ElementSet& f_set) {
  const ElementSet f = NormalizeSet(f_set, basis.dimension());
  return Rank(Rows(basis, f)) == basis.k() + static_cast<int>(f.size());
}

LinearIdentifyResult MinWeightIdentifyingFromBasis(
    const AffineBasis& basis, const WeightedGroundSet& weights) {
  const int n = basis.dimension();
  if (weights.size() != n) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });

  // Keep the rows in echelon form so each test is one more elimination.
  RationalMatrix rows = basis.differences();
  ReduceRowEchelon(rows);
  LinearIdentifyResult result;
  for (int e : order) {
    if (static_cast<int>(rows.size()) == n) break;
    RationalMatrix trial = rows;
    trial.push_back(UnitVector(n, e));
    if (Rank(trial) == static_cast<int>(trial.size())) {
      ReduceRowEchelon(trial);
      rows = std::move(trial);
      result.independent_set.push_back(e);
    }
  }
  std::sort(result.independent_set.begin(), result.independent_set.end());
  result.identifying_set = Complement(result.independent_set, n);
  result.total_weight = weights.WeightOf(result.identifying_set);
  return result;
}

LinearVerification VerifyIdentifyingFromBasis(const AffineBasis& basis,
                                              const ElementSet& s_set) {
  const int n = basis.dimension();
  const ElementSet f = Complement(NormalizeSet(s_set, n), n);
  const RationalMatrix rows = Rows(basis, f);
  // A kernel vector of the row combination gives lambda on the differences
  // and mu on the unit vectors; the difference part is the direction.
  const auto kernel =
      NullspaceVector(Transpose(rows, n), static_cast<int>(rows.size()));
  LinearVerification out;
  if (!kernel) return out;
  out.identifying = false;
  out.direction.assign(n, Rational(0));
  for (int i = 0; i < basis.k(); ++i) {
    for (int e = 0; e < n; ++e) {
      out.direction[e] += (*kernel)[i] * basis.differences()[i][e];
    }
  }
  return out;
}

}  // namespace ctlsets
