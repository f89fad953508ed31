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

#ifndef CTLSETS_HITTING_SET_HPP_
#define CTLSETS_HITTING_SET_HPP_

#include <cstdint>
#include <vector>

#include "ctlsets/core.hpp"

namespace ctlsets {

// Exact minimum-weight hitting set by branch and bound. Edges containing
// another edge are dropped first. Among all minimum-weight hitting sets built
// from elements of the remaining edges, returns the lexicographically
// smallest (as a sorted id sequence).
// Throws kSubsetExplosion once more than `node_cap` search nodes are
// expanded. An empty edge makes the instance infeasible (kInvalidParams).
struct HittingSetResult {
  ElementSet chosen;
  Rational weight;
  std::int64_t nodes_expanded = 0;
};

HittingSetResult MinWeightHittingSet(const std::vector<ElementSet>& edges,
                                     const WeightedGroundSet& weights,
                                     std::int64_t node_cap);

}  // namespace ctlsets

#endif  // CTLSETS_HITTING_SET_HPP_
