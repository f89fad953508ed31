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

#include "ctlsets/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace ctlsets {
namespace {

using Mask = std::uint64_t;

Mask Bit(int e) { return Mask{1} << e; }

Mask ToBits(const ElementSet& set) {
  Mask m = 0;
  for (int e : set) m |= Bit(e);
  return m;
}

void CheckSubmodularTriple(const std::function<Rational(Mask)>& f, Mask t,
                           int a, int b) {
  const Rational lhs = f(t | Bit(a)) + f(t | Bit(b));
  const Rational rhs = f(t | Bit(a) | Bit(b)) + f(t);
  if (lhs < rhs) {
    throw Error(ErrorCode::kOracleInconsistent, "f is not submodular");
  }
}

void CheckMonotoneStep(const std::function<Rational(Mask)>& f, Mask t, int a) {
  if (f(t | Bit(a)) < f(t)) {
    throw Error(ErrorCode::kOracleInconsistent, "f is not monotone");
  }
}

Rational Sum(const RationalVector& x, Mask t) {
  Rational total = 0;
  for (int e = 0; t != 0; ++e, t >>= 1) {
    if (t & 1) total += x[e];
  }
  return total;
}

int RequireEnumerable(const PolymatroidOracle& f, int max_ground) {
  const int n = f.ground_size();
  if (n > max_ground || n > 30) {
    throw Error(ErrorCode::kEnumerationExplosion,
                "ground set too large for subset enumeration");
  }
  return n;
}

}  // namespace

PolymatroidOracle::PolymatroidOracle(int ground_size, ValueFn value,
                                     std::string name)
    : ground_size_(ground_size),
      value_([fn = std::move(value)](const ElementSet& set) {
        Rational v = fn(set);
        v.canonicalize();
        return v;
      }),
      name_(std::move(name)) {
  if (ground_size_ < 0 || ground_size_ > 62) {
    throw Error(ErrorCode::kInvalidParams, "unsupported ground set size");
  }
  const int n = ground_size_;
  if (value_({}) != 0) {
    throw Error(ErrorCode::kOracleInconsistent, "f(empty) must be 0");
  }
  if (n <= 12) {
    const auto table = Table(12);
    const auto f = [&table](Mask m) { return table[m]; };
    for (Mask t = 0; t < Bit(n); ++t) {
      for (int a = 0; a < n; ++a) {
        if (t & Bit(a)) continue;
        CheckMonotoneStep(f, t, a);
        for (int b = a + 1; b < n; ++b) {
          if (!(t & Bit(b))) CheckSubmodularTriple(f, t, a, b);
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(0x5eed);
  const auto f = [this](Mask m) { return value_(FromMask(m)); };
  for (int i = 0; i < 2000; ++i) {
    const Mask t = rng() & (Bit(n) - 1);
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    if (t & Bit(a)) continue;
    CheckMonotoneStep(f, t, a);
    if (a != b && !(t & Bit(b))) CheckSubmodularTriple(f, t, a, b);
  }
}

std::vector<Rational> PolymatroidOracle::Table(int max_ground) const {
  if (ground_size_ > max_ground || ground_size_ > 30) {
    throw Error(ErrorCode::kEnumerationExplosion,
                "ground set too large for subset enumeration");
  }
  std::vector<Rational> table(std::size_t{1} << ground_size_);
  for (Mask m = 0; m < table.size(); ++m) table[m] = value_(FromMask(m));
  return table;
}

PolymatroidOracle TablePolymatroid(int ground_size, std::vector<Rational> table) {
  if (ground_size < 0 || ground_size > 30 ||
      table.size() != (std::size_t{1} << ground_size)) {
    throw Error(ErrorCode::kInvalidParams, "table needs 2^n entries");
  }
  return PolymatroidOracle(
      ground_size,
      [table = std::move(table)](const ElementSet& set) {
        return table[ToBits(set)];
      },
      "table");
}

PolymatroidOracle MatroidRankPolymatroid(const MatroidOracle& m) {
  return PolymatroidOracle(
      m.ground_size(),
      [m](const ElementSet& set) { return Rational(m.Rank(set)); },
      "matroid-rank");
}

PolymatroidOracle CoveragePolymatroid(const std::vector<ElementSet>& covers,
                                      const std::vector<Rational>& item_weights) {
  for (const auto& c : covers) {
    for (int item : c) {
      if (item < 0 || item >= static_cast<int>(item_weights.size())) {
        throw Error(ErrorCode::kInvalidParams, "coverage item out of range");
      }
    }
  }
  for (const auto& w : item_weights) {
    if (w < 0) throw Error(ErrorCode::kInvalidParams, "negative item weight");
  }
  return PolymatroidOracle(
      static_cast<int>(covers.size()),
      [covers, item_weights](const ElementSet& set) {
        std::vector<char> hit(item_weights.size(), 0);
        Rational total = 0;
        for (int e : set) {
          for (int item : covers[e]) {
            if (!hit[item]) {
              hit[item] = 1;
              total += item_weights[item];
            }
          }
        }
        return total;
      },
      "coverage");
}

PolymatroidOracle BudgetAdditivePolymatroid(const Rational& budget,
                                            const std::vector<Rational>& a) {
  if (budget < 0) throw Error(ErrorCode::kInvalidParams, "negative budget");
  for (const auto& v : a) {
    if (v < 0) throw Error(ErrorCode::kInvalidParams, "negative coefficient");
  }
  return PolymatroidOracle(
      static_cast<int>(a.size()),
      [budget, a](const ElementSet& set) {
        Rational total = 0;
        for (int e : set) total += a[e];
        return total < budget ? total : budget;
      },
      "budget-additive");
}

BaseMembership CheckBaseMembership(const PolymatroidOracle& f,
                                   const RationalVector& x_in, int max_ground) {
  const int n = RequireEnumerable(f, max_ground);
  const RationalVector x = Canonical(x_in);
  if (static_cast<int>(x.size()) != n) {
    throw Error(ErrorCode::kInvalidParams, "vector length mismatch");
  }
  BaseMembership out;
  for (int e = 0; e < n; ++e) {
    if (x[e] < 0) {
      out.in_base = false;
      out.violation = BaseViolation::kNegativeEntry;
      out.violated_set = {e};
      out.excess = -x[e];
      return out;
    }
  }
  const auto table = f.Table(max_ground);
  Rational worst = 0;
  Mask worst_mask = 0;
  for (Mask t = 1; t < table.size(); ++t) {
    const Rational excess = Sum(x, t) - table[t];
    if (excess > worst) {
      worst = excess;
      worst_mask = t;
    }
  }
  if (worst > 0) {
    out.in_base = false;
    out.violation = BaseViolation::kExceedsRank;
    out.violated_set = FromMask(worst_mask);
    out.excess = worst;
    return out;
  }
  const Mask all = Bit(n) - 1;
  if (Sum(x, all) != table[all]) {
    out.in_base = false;
    out.violation = BaseViolation::kNotOnBase;
    out.violated_set = FromMask(all);
    out.excess = table[all] - Sum(x, all);
  }
  return out;
}

PolymatroidComponents ComputePolymatroidComponents(const PolymatroidOracle& f,
                                                   SplitOrder order,
                                                   int max_ground) {
  const int n = RequireEnumerable(f, max_ground);
  const auto table = f.Table(max_ground);
  PolymatroidComponents out;
  std::vector<Mask> pending;
  if (n > 0) pending.push_back(Bit(n) - 1);
  std::vector<Mask> done;
  while (!pending.empty()) {
    const Mask block = pending.back();
    pending.pop_back();
    // Proper nonempty T containing the lowest element of the block; each
    // bipartition is visited once.
    const Mask low = block & (~block + 1);
    Mask found = 0;
    auto try_part = [&](Mask t) {
      if ((t & low) && t != block && table[t] + table[block & ~t] == table[block]) {
        found = t;
        return true;
      }
      return false;
    };
    if (order == SplitOrder::kSmallestFirst) {
      for (Mask t = (0 - block) & block; t != 0; t = (t - block) & block) {
        if (try_part(t)) break;
      }
    } else {
      for (Mask t = (block - 1) & block; t != 0; t = (t - 1) & block) {
        if (try_part(t)) break;
      }
    }
    if (found == 0) {
      done.push_back(block);
      continue;
    }
    out.certificates.push_back({FromMask(block), FromMask(found)});
    pending.push_back(found);
    pending.push_back(block & ~found);
  }
  for (Mask m : done) out.partition.push_back(FromMask(m));
  std::sort(out.partition.begin(), out.partition.end());
  return out;
}

ElementSet DependenceFunction(const PolymatroidOracle& f,
                              const RationalVector& x_in, int element,
                              int max_ground) {
  const int n = RequireEnumerable(f, max_ground);
  const RationalVector x = Canonical(x_in);
  if (element < 0 || element >= n) {
    throw Error(ErrorCode::kInvalidParams, "element out of range");
  }
  if (!CheckBaseMembership(f, x, max_ground).in_base) {
    throw Error(ErrorCode::kNotABase, "x is not in the base polyhedron");
  }
  const auto table = f.Table(max_ground);
  // e' qualifies iff x_e' > 0 and every tight set containing e contains e'.
  Mask allowed = (Bit(n) - 1) & ~Bit(element);
  for (int e = 0; e < n; ++e) {
    if (x[e] == 0) allowed &= ~Bit(e);
  }
  for (Mask t = 0; t < table.size(); ++t) {
    if ((t & Bit(element)) && Sum(x, t) == table[t]) allowed &= t;
  }
  ElementSet dep = FromMask(allowed | Bit(element));
  return dep;
}

RationalVector SymmetricBase(const PolymatroidOracle& f, int max_ground) {
  const int n = RequireEnumerable(f, max_ground);
  const auto table = f.Table(max_ground);
  // The average over orderings gives e the marginal f(T+e) - f(T) with
  // probability |T|! (n-|T|-1)! / n!.
  std::vector<Rational> coef(n > 0 ? n : 1);
  for (int k = 0; k < n; ++k) {
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= k; ++i) num *= i;
    for (int i = 2; i <= n - k - 1; ++i) num *= i;
    for (int i = 2; i <= n; ++i) den *= i;
    coef[k] = Rational(num, den);
    coef[k].canonicalize();
  }
  RationalVector x(n, Rational(0));
  for (Mask t = 0; t < table.size(); ++t) {
    const int k = std::popcount(t);
    for (int e = 0; e < n; ++e) {
      if (t & Bit(e)) continue;
      x[e] += coef[k] * (table[t | Bit(e)] - table[t]);
    }
  }
  return x;
}

PolymatroidIdentifyResult MinWeightPolymatroidIdentifying(
    const PolymatroidOracle& f, const WeightedGroundSet& weights,
    int max_ground) {
  if (weights.size() != f.ground_size()) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  PolymatroidIdentifyResult result;
  result.components =
      ComputePolymatroidComponents(f, SplitOrder::kSmallestFirst, max_ground);
  for (const auto& cls : result.components.partition) {
    if (cls.size() < 2) continue;
    int keep = cls.front();
    for (int e : cls) {
      if (weights[e] > weights[keep]) keep = e;
    }
    for (int e : cls) {
      if (e != keep) result.identifying_set.push_back(e);
    }
  }
  std::sort(result.identifying_set.begin(), result.identifying_set.end());
  result.total_weight = weights.WeightOf(result.identifying_set);
  return result;
}

PolymatroidVerification VerifyPolymatroidIdentifying(const PolymatroidOracle& f,
                                                     const ElementSet& s_set,
                                                     int max_ground) {
  const int n = RequireEnumerable(f, max_ground);
  const ElementSet s = NormalizeSet(s_set, n);
  const auto components =
      ComputePolymatroidComponents(f, SplitOrder::kSmallestFirst, max_ground);
  PolymatroidVerification out;
  for (const auto& cls : components.partition) {
    const ElementSet outside = Difference(cls, s);
    if (outside.size() < 2) continue;
    out.identifying = false;
    out.component = cls;
    out.decreased = outside[0];
    out.increased = outside[1];
    break;
  }
  if (out.identifying) return out;

  const auto table = f.Table(max_ground);
  RationalVector x = SymmetricBase(f, max_ground);
  const Mask comp = ToBits(out.component);
  for (Mask t = (comp - 1) & comp; t != 0; t = (t - 1) & comp) {
    if (!(Sum(x, t) < table[t])) {
      throw Error(ErrorCode::kInteriorBaseNotFound,
                  "symmetric base is tight on a proper subset of a component");
    }
  }
  // Largest step keeping x_e >= 0 and x(T) <= f(T) for T with e' in T, e not.
  const Mask dec = Bit(out.decreased);
  const Mask inc = Bit(out.increased);
  Rational eps = x[out.decreased];
  for (Mask t = 0; t < table.size(); ++t) {
    if ((t & inc) && !(t & dec)) {
      const Rational slack = table[t] - Sum(x, t);
      if (slack < eps) eps = slack;
    }
  }
  RationalVector y = x;
  y[out.decreased] -= eps;
  y[out.increased] += eps;
  out.base_a = std::move(x);
  out.base_b = std::move(y);
  return out;
}

}  // namespace ctlsets
