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

#include "ctlsets/explicit_list.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ctlsets {
namespace {

std::int64_t Pairs(std::int64_t n) { return n * (n - 1) / 2; }

// Number of pairs inside `classes` that element e separates.
std::int64_t Separated(const SolutionList& x,
                       const std::vector<std::vector<int>>& classes, int e) {
  std::int64_t total = 0;
  for (const auto& cls : classes) {
    std::map<int, std::int64_t> counts;
    for (int i : cls) ++counts[x[i][e]];
    std::int64_t same = 0;
    for (const auto& [value, count] : counts) same += Pairs(count);
    total += Pairs(static_cast<std::int64_t>(cls.size())) - same;
  }
  return total;
}

std::vector<std::vector<int>> Refine(const SolutionList& x,
                                     const std::vector<std::vector<int>>& classes,
                                     int e) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : classes) {
    std::map<int, std::vector<int>> parts;
    for (int i : cls) parts[x[i][e]].push_back(i);
    for (auto& [value, part] : parts) {
      if (part.size() > 1) out.push_back(std::move(part));
    }
  }
  return out;
}

// True when `candidate` (separated pairs a, weight wa) beats (b, wb).
bool BetterRatio(std::int64_t a, const Rational& wa, std::int64_t b,
                 const Rational& wb) {
  if (wa == 0 || wb == 0) return wa == 0 && wb != 0;
  return Rational(a) * wb > Rational(b) * wa;
}

}  // namespace

SolutionList::SolutionList(int dimension, std::vector<StateVector> vectors)
    : dimension_(dimension) {
  if (dimension < 0) {
    throw Error(ErrorCode::kInvalidParams, "negative dimension");
  }
  std::set<StateVector> seen;
  for (auto& v : vectors) {
    if (static_cast<int>(v.size()) != dimension) {
      throw Error(ErrorCode::kInvalidParams, "state has wrong dimension");
    }
    if (seen.insert(v).second) vectors_.push_back(std::move(v));
  }
}

bool SolutionList::IsBinary() const {
  for (const auto& v : vectors_) {
    for (int value : v) {
      if (value != 0 && value != 1) return false;
    }
  }
  return true;
}

std::optional<int> SolutionList::IndexOf(const StateVector& x) const {
  for (int i = 0; i < size(); ++i) {
    if (vectors_[i] == x) return i;
  }
  return std::nullopt;
}

ExplicitIdentifyResult GreedyIdentifying(const SolutionList& x,
                                         const WeightedGroundSet& weights) {
  const int n = x.dimension();
  if (weights.size() != n) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  ExplicitIdentifyResult result;
  std::vector<std::vector<int>> classes;
  if (x.size() > 1) {
    classes.emplace_back();
    for (int i = 0; i < x.size(); ++i) classes.back().push_back(i);
  }
  std::vector<char> used(n, 0);
  while (!classes.empty()) {
    int best = -1;
    std::int64_t best_count = 0;
    for (int e = 0; e < n; ++e) {
      if (used[e]) continue;
      const std::int64_t count = Separated(x, classes, e);
      if (count == 0) continue;
      if (best < 0 || BetterRatio(count, weights[e], best_count, weights[best])) {
        best = e;
        best_count = count;
      }
    }
    // Distinct states always differ somewhere, so best exists.
    used[best] = 1;
    result.identifying_set.push_back(best);
    result.trace.push_back({best, best_count, weights[best]});
    classes = Refine(x, classes, best);
  }
  std::sort(result.identifying_set.begin(), result.identifying_set.end());
  result.total_weight = weights.WeightOf(result.identifying_set);
  return result;
}

ExplicitIdentifyResult ExactIdentifying(const SolutionList& x,
                                        const WeightedGroundSet& weights,
                                        std::uint64_t max_subsets) {
  const int n = x.dimension();
  if (weights.size() != n) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  if (n >= 63 || (std::uint64_t{1} << n) > max_subsets) {
    throw Error(ErrorCode::kSubsetExplosion, "too many subsets to enumerate");
  }
  ExplicitIdentifyResult result;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet s = FromMask(mask);
    const Rational w = weights.WeightOf(s);
    if (found && (w > result.total_weight ||
                  (w == result.total_weight && !(s < result.identifying_set)))) {
      continue;
    }
    if (!VerifyExplicitIdentifying(x, s).identifying) continue;
    found = true;
    result.identifying_set = s;
    result.total_weight = w;
  }
  return result;
}

ExplicitVerification VerifyExplicitIdentifying(const SolutionList& x,
                                               const ElementSet& s_set) {
  const ElementSet s = NormalizeSet(s_set, x.dimension());
  std::map<StateVector, int> first;
  ExplicitVerification out;
  for (int i = 0; i < x.size(); ++i) {
    StateVector key;
    key.reserve(s.size());
    for (int e : s) key.push_back(x[i][e]);
    const auto [it, inserted] = first.emplace(std::move(key), i);
    if (!inserted) {
      out.identifying = false;
      out.witness = {it->second, i};
      return out;
    }
  }
  return out;
}

}  // namespace ctlsets
