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

#ifndef CTLSETS_CORE_HPP_
#define CTLSETS_CORE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctlsets {

using Rational = mpq_class;

// Sorted, duplicate-free list of element (or arc) ids.
using ElementSet = std::vector<int>;

enum class ErrorCode {
  kInvalidParams,
  kSelfLoop,
  kNoStPath,
  kNotAcyclic,
  kPathExplosion,
  kSubsetExplosion,
  kEnumerationExplosion,
  kEliminationExplosion,
  kNotABasis,
  kElementInBasis,
  kOracleInconsistent,
  kNotABase,
  kNotIdentifying,
  kTargetNotInX,
  kNoSubgradient,
  kTargetOutsideAffineHull,
  kNotBinary,
  kRewriteStuck,
  kInteriorBaseNotFound,
  kNoNonnegativeTolls,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// True for the three cap-exceeded codes.
bool IsCapError(ErrorCode code);

// Parses "p/q", "p", or a decimal literal such as "0.25".
Rational ParseRational(std::string_view text);
// Canonical "p/q" form; integers are printed without a denominator.
std::string ToString(const Rational& value);

// Sorts and deduplicates; throws kInvalidParams for ids outside [0, size).
ElementSet NormalizeSet(std::vector<int> ids, int size);
bool Contains(const ElementSet& set, int id);
ElementSet Complement(const ElementSet& set, int size);
ElementSet Difference(const ElementSet& a, const ElementSet& b);
ElementSet Intersection(const ElementSet& a, const ElementSet& b);
std::vector<char> ToMask(const ElementSet& set, int size);
ElementSet FromMask(std::uint64_t mask);

// Ground set E = {0..size-1} with nonnegative rational weights.
class WeightedGroundSet {
 public:
  WeightedGroundSet() = default;
  explicit WeightedGroundSet(std::vector<Rational> weights);
  static WeightedGroundSet Unit(int size);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& operator[](int e) const { return weights_[e]; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational WeightOf(std::span<const int> elements) const;

 private:
  std::vector<Rational> weights_;
};

}  // namespace ctlsets

#endif  // CTLSETS_CORE_HPP_
