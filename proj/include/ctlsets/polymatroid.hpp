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

#ifndef CTLSETS_POLYMATROID_HPP_
#define CTLSETS_POLYMATROID_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/linalg.hpp"
#include "ctlsets/matroid.hpp"

namespace ctlsets {

// Value oracle for a normalized, monotone, submodular f on subsets of
// {0..ground_size-1}. Construction verifies the three properties on every
// subset when ground_size <= 12 and on random samples beyond that, throwing
// kOracleInconsistent on a violation.
class PolymatroidOracle {
 public:
  using ValueFn = std::function<Rational(const ElementSet&)>;

  PolymatroidOracle(int ground_size, ValueFn value, std::string name = "user");

  int ground_size() const { return ground_size_; }
  const std::string& name() const { return name_; }
  Rational Value(const ElementSet& set) const { return value_(set); }
  // f on every subset, indexed by bit mask. Throws kEnumerationExplosion
  // beyond `max_ground` elements.
  std::vector<Rational> Table(int max_ground = 20) const;

 private:
  int ground_size_;
  ValueFn value_;
  std::string name_;
};

// f given on all 2^n subsets, indexed by bit mask.
PolymatroidOracle TablePolymatroid(int ground_size, std::vector<Rational> table);
PolymatroidOracle MatroidRankPolymatroid(const MatroidOracle& m);
// f(T) = total weight of the items covered by the sets chosen in T.
PolymatroidOracle CoveragePolymatroid(const std::vector<ElementSet>& covers,
                                      const std::vector<Rational>& item_weights);
// f(T) = min(budget, sum of a_e over T).
PolymatroidOracle BudgetAdditivePolymatroid(const Rational& budget,
                                            const std::vector<Rational>& a);

enum class BaseViolation { kNone, kNegativeEntry, kExceedsRank, kNotOnBase };

struct BaseMembership {
  bool in_base = true;
  BaseViolation violation = BaseViolation::kNone;
  // For kExceedsRank the subset maximizing x(T) - f(T); for kNegativeEntry
  // the offending element; for kNotOnBase the whole ground set.
  ElementSet violated_set;
  Rational excess;
};

BaseMembership CheckBaseMembership(const PolymatroidOracle& f,
                                   const RationalVector& x,
                                   int max_ground = 20);

struct SplitCertificate {
  ElementSet block;  // the set being split
  ElementSet part;   // T with f(T) + f(block \ T) = f(block)
};

struct PolymatroidComponents {
  std::vector<ElementSet> partition;  // ordered by smallest element
  std::vector<SplitCertificate> certificates;
};

// Which separator to split along first; the final partition does not depend
// on it.
enum class SplitOrder { kSmallestFirst, kLargestFirst };

PolymatroidComponents ComputePolymatroidComponents(
    const PolymatroidOracle& f, SplitOrder order = SplitOrder::kSmallestFirst,
    int max_ground = 20);

// Elements e' such that x + eps (chi_e - chi_e') stays in B(f) for some
// eps > 0 (e itself included). Throws kNotABase.
ElementSet DependenceFunction(const PolymatroidOracle& f,
                              const RationalVector& x, int element,
                              int max_ground = 20);

// Average of the greedy vertices over all element orderings.
RationalVector SymmetricBase(const PolymatroidOracle& f, int max_ground = 20);

struct PolymatroidIdentifyResult {
  ElementSet identifying_set;
  Rational total_weight;
  PolymatroidComponents components;
};

PolymatroidIdentifyResult MinWeightPolymatroidIdentifying(
    const PolymatroidOracle& f, const WeightedGroundSet& weights,
    int max_ground = 20);

struct PolymatroidVerification {
  bool identifying = true;
  ElementSet component;  // a component with two elements outside S
  int decreased = -1;    // e
  int increased = -1;    // e'
  RationalVector base_a;  // x, strictly inside on the component
  RationalVector base_b;  // x + eps (chi_e' - chi_e)
};

// Checks |S ∩ E_i| >= |E_i| - 1 on every component and, if that fails,
// builds two distinct bases that agree on S.
PolymatroidVerification VerifyPolymatroidIdentifying(
    const PolymatroidOracle& f, const ElementSet& s_set, int max_ground = 20);

}  // namespace ctlsets

#endif  // CTLSETS_POLYMATROID_HPP_
