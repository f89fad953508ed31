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

#ifndef CTLSETS_EXPLICIT_LIST_HPP_
#define CTLSETS_EXPLICIT_LIST_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ctlsets/core.hpp"

namespace ctlsets {

using StateVector = std::vector<int>;

// Explicitly listed feasible states over E = {0..dimension-1}. Duplicates
// are dropped, keeping the first occurrence.
class SolutionList {
 public:
  SolutionList() = default;
  SolutionList(int dimension, std::vector<StateVector> vectors);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const StateVector& operator[](int i) const { return vectors_[i]; }
  const std::vector<StateVector>& vectors() const { return vectors_; }
  bool IsBinary() const;
  std::optional<int> IndexOf(const StateVector& x) const;

 private:
  int dimension_ = 0;
  std::vector<StateVector> vectors_;
};

struct CoverStep {
  int element;
  std::int64_t newly_separated;  // pairs separated by this pick
  Rational weight;
};

struct ExplicitIdentifyResult {
  ElementSet identifying_set;
  Rational total_weight;
  std::vector<CoverStep> trace;  // empty for the exact solver
};

// Greedy weighted set cover over the pairs of states. Each step picks the
// element maximizing separated pairs per unit weight; ties go to the
// smaller id and zero-weight elements rank above all others.
ExplicitIdentifyResult GreedyIdentifying(const SolutionList& x,
                                         const WeightedGroundSet& weights);

// Minimum-weight identifying set by enumerating all 2^|E| subsets; ties go
// to the lexicographically smallest set. Throws kSubsetExplosion when
// 2^|E| exceeds `max_subsets`.
ExplicitIdentifyResult ExactIdentifying(const SolutionList& x,
                                        const WeightedGroundSet& weights,
                                        std::uint64_t max_subsets = 1u << 24);

struct ExplicitVerification {
  bool identifying = true;
  std::pair<int, int> witness{-1, -1};  // indices of a colliding pair
};

ExplicitVerification VerifyExplicitIdentifying(const SolutionList& x,
                                               const ElementSet& s_set);

}  // namespace ctlsets

#endif  // CTLSETS_EXPLICIT_LIST_HPP_
