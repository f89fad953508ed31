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

#include "ctlsets/core.hpp"

#include <algorithm>
#include <cctype>

namespace ctlsets {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNoStPath: return "NoStPath";
    case ErrorCode::kNotAcyclic: return "NotAcyclic";
    case ErrorCode::kPathExplosion: return "PathExplosion";
    case ErrorCode::kSubsetExplosion: return "SubsetExplosion";
    case ErrorCode::kEnumerationExplosion: return "EnumerationExplosion";
    case ErrorCode::kEliminationExplosion: return "EliminationExplosion";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kElementInBasis: return "ElementInBasis";
    case ErrorCode::kOracleInconsistent: return "OracleInconsistent";
    case ErrorCode::kNotABase: return "NotABase";
    case ErrorCode::kNotIdentifying: return "NotIdentifying";
    case ErrorCode::kTargetNotInX: return "TargetNotInX";
    case ErrorCode::kNoSubgradient: return "NoSubgradient";
    case ErrorCode::kTargetOutsideAffineHull: return "TargetOutsideAffineHull";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kRewriteStuck: return "RewriteStuck";
    case ErrorCode::kInteriorBaseNotFound: return "InteriorBaseNotFound";
    case ErrorCode::kNoNonnegativeTolls: return "NoNonnegativeTolls";
  }
  return "Unknown";
}

bool IsCapError(ErrorCode code) {
  return code == ErrorCode::kPathExplosion ||
         code == ErrorCode::kSubsetExplosion ||
         code == ErrorCode::kEnumerationExplosion ||
         code == ErrorCode::kEliminationExplosion;
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorCode::kInvalidParams, "empty rational");
  auto bad = [&] {
    return Error(ErrorCode::kInvalidParams, "malformed rational '" + s + "'");
  };
  const auto dot = s.find('.');
  Rational value;
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw bad();
    mpz_class num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) {
      throw bad();
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    value = Rational(num, den);
  } else {
    if (value.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw bad();
    if (value.get_den() == 0) throw bad();
  }
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) { return value.get_str(); }

ElementSet NormalizeSet(std::vector<int> ids, int size) {
  for (int id : ids) {
    if (id < 0 || id >= size) {
      throw Error(ErrorCode::kInvalidParams,
                  "element id " + std::to_string(id) + " out of range");
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool Contains(const ElementSet& set, int id) {
  return std::binary_search(set.begin(), set.end(), id);
}

ElementSet Complement(const ElementSet& set, int size) {
  ElementSet out;
  for (int e = 0; e < size; ++e) {
    if (!Contains(set, e)) out.push_back(e);
  }
  return out;
}

ElementSet Difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ElementSet Intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<char> ToMask(const ElementSet& set, int size) {
  std::vector<char> mask(size, 0);
  for (int e : set) mask[e] = 1;
  return mask;
}

ElementSet FromMask(std::uint64_t mask) {
  ElementSet out;
  for (int e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1) out.push_back(e);
  }
  return out;
}

WeightedGroundSet::WeightedGroundSet(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  for (auto& w : weights_) {
    w.canonicalize();
    if (w < 0) throw Error(ErrorCode::kInvalidParams, "negative weight");
  }
}

WeightedGroundSet WeightedGroundSet::Unit(int size) {
  return WeightedGroundSet(std::vector<Rational>(size, Rational(1)));
}

Rational WeightedGroundSet::WeightOf(std::span<const int> elements) const {
  Rational total = 0;
  for (int e : elements) total += weights_.at(e);
  return total;
}

}  // namespace ctlsets
