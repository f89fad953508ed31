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

#ifndef CTLSETS_LINEAR_HPP_
#define CTLSETS_LINEAR_HPP_

#include <optional>
#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/linalg.hpp"

namespace ctlsets {

// A convex set X described by an affine basis x0..xk. A set F is
// independent in the matroid A_X when the differences xi - x0 together
// with the unit vectors of F are linearly independent; S identifies X
// exactly when E \ S is independent.
class AffineBasis {
 public:
  // Throws kInvalidParams on an empty list, mismatched dimensions, or
  // affinely dependent points.
  explicit AffineBasis(std::vector<RationalVector> points);

  int dimension() const { return dimension_; }  // |E|
  int k() const { return static_cast<int>(differences_.size()); }
  const std::vector<RationalVector>& points() const { return points_; }
  const std::vector<RationalVector>& differences() const {
    return differences_;
  }

  bool InAffineHull(const RationalVector& point) const;

 private:
  int dimension_ = 0;
  std::vector<RationalVector> points_;
  std::vector<RationalVector> differences_;
};

bool AxIndependent(const AffineBasis& basis, const ElementSet& f_set);

struct LinearIdentifyResult {
  ElementSet identifying_set;  // S = E \ F
  ElementSet independent_set;  // F, a basis of A_X
  Rational total_weight;
};

LinearIdentifyResult MinWeightIdentifyingFromBasis(
    const AffineBasis& basis, const WeightedGroundSet& weights);

struct LinearVerification {
  bool identifying = true;
  // When not identifying: a nonzero direction in the span of the
  // differences that vanishes on S.
  RationalVector direction;
};

LinearVerification VerifyIdentifyingFromBasis(const AffineBasis& basis,
                                              const ElementSet& s_set);

}  // namespace ctlsets

#endif  // CTLSETS_LINEAR_HPP_
