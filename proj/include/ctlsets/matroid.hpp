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

#ifndef CTLSETS_MATROID_HPP_
#define CTLSETS_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/graph.hpp"

namespace ctlsets {

// Independence oracle on the ground set {0..ground_size-1}. Queries receive
// sorted, duplicate-free id lists and must be pure.
class MatroidOracle {
 public:
  using IndependenceFn = std::function<bool(const ElementSet&)>;

  MatroidOracle(int ground_size, IndependenceFn is_independent,
                std::string name = "user");

  int ground_size() const { return ground_size_; }
  const std::string& name() const { return name_; }
  bool IsIndependent(const ElementSet& set) const;
  // Size of a maximal independent subset of `set`.
  int Rank(const ElementSet& set) const;

 private:
  int ground_size_;
  IndependenceFn is_independent_;
  std::string name_;
};

MatroidOracle UniformMatroid(int rank, int size);
// Elements are the arcs of g, independent when they form an undirected forest.
MatroidOracle GraphicMatroid(const Digraph& g);
MatroidOracle PartitionMatroid(const std::vector<ElementSet>& blocks,
                               const std::vector<int>& capacities);
MatroidOracle FreeMatroid(int size);

// Sanity checks for user oracles: the empty set is independent and
// independence is inherited by random subsets of random independent sets.
// Throws kOracleInconsistent.
void SpotCheckMatroid(const MatroidOracle& m, int samples, std::uint64_t seed);

// Greedy basis, scanning elements in increasing id order.
ElementSet AnyBasis(const MatroidOracle& m);

// The unique circuit inside basis + {e}. Throws kNotABasis, kElementInBasis.
ElementSet FundamentalCircuit(const MatroidOracle& m, const ElementSet& basis,
                              int element);

struct MatroidComponents {
  std::vector<ElementSet> partition;  // ordered by smallest element
};

// Connected components via the fundamental graph of a greedy basis. Loops and
// coloops come out as singletons.
MatroidComponents ComputeMatroidComponents(const MatroidOracle& m);

struct MatroidIdentifyResult {
  ElementSet identifying_set;
  Rational total_weight;
  MatroidComponents components;
};

MatroidIdentifyResult MinWeightMatroidIdentifying(
    const MatroidOracle& m, const WeightedGroundSet& weights);

// All circuits, ordered by size and then lexicographically. Throws
// kEnumerationExplosion when the ground set exceeds `max_ground`.
std::vector<ElementSet> EnumerateCircuits(const MatroidOracle& m,
                                          int max_ground = 20);

struct MatroidVerification {
  bool identifying = true;
  ElementSet circuit;  // a circuit with at least two elements outside S
  ElementSet basis_a;  // two bases agreeing on S
  ElementSet basis_b;
};

// Checks |S ∩ C| >= |C| - 1 for every circuit C.
MatroidVerification VerifyMatroidIdentifying(const MatroidOracle& m,
                                             const ElementSet& s_set,
                                             int max_ground = 20);

}  // namespace ctlsets

#endif  // CTLSETS_MATROID_HPP_
