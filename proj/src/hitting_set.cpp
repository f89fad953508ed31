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

#include "ctlsets/hitting_set.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace ctlsets {
namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : words_((n + 63) / 64, 0) {}
  void Set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool Intersects(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  bool SubsetOf(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }
  // Elements of *this not in `mask`, appended in increasing order.
  void Without(const Bits& mask, std::vector<int>& out) const {
    out.clear();
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w] & ~mask.words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
  int CountWithout(const Bits& mask) const {
    int count = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      count += std::popcount(words_[w] & ~mask.words_[w]);
    }
    return count;
  }
  void OrWith(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }

 private:
  std::vector<std::uint64_t> words_;
};

template <typename W>
class Search {
 public:
  Search(std::vector<Bits> edges, std::vector<W> weights, int n,
         std::int64_t node_cap)
      : edges_(std::move(edges)),
        weights_(std::move(weights)),
        n_(n),
        node_cap_(node_cap) {}

  // Minimum weight over hitting sets that contain `in` and avoid `out`,
  // searching only below `bound` (inclusive when `stop_at_first`).
  // Returns true when some set was found.
  bool Run(const Bits& in, const Bits& out, const W& start_weight,
           const W& bound, bool stop_at_first, W& best, Bits& best_set) {
    stop_at_first_ = stop_at_first;
    found_ = false;
    bound_ = bound;
    best_ = &best;
    best_set_ = &best_set;
    Bits chosen = in;
    Bits excluded = out;
    Recurse(chosen, excluded, start_weight);
    return found_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  bool Prunes(const W& total) const {
    return stop_at_first_ ? total > bound_ : !(total < bound_);
  }

  void Recurse(Bits& chosen, Bits& excluded, const W& weight) {
    if (stop_at_first_ && found_) return;
    if (++nodes_ > node_cap_) {
      throw Error(ErrorCode::kSubsetExplosion,
                  "branch and bound exceeded " + std::to_string(node_cap_) +
                      " nodes");
    }
    // Unhit edges, the most constrained first.
    int branch_edge = -1;
    int branch_size = std::numeric_limits<int>::max();
    unhit_.clear();
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      if (edges_[e].Intersects(chosen)) continue;
      const int avail = edges_[e].CountWithout(excluded);
      if (avail == 0) return;
      unhit_.push_back({avail, e});
      if (avail < branch_size) {
        branch_size = avail;
        branch_edge = e;
      }
    }
    if (branch_edge < 0) {
      if (!Prunes(weight)) {
        found_ = true;
        bound_ = weight;
        *best_ = weight;
        *best_set_ = chosen;
      }
      return;
    }
    // Disjoint-packing lower bound over the remaining edges.
    std::sort(unhit_.begin(), unhit_.end());
    Bits used(n_);
    W lower = weight;
    for (const auto& [avail, e] : unhit_) {
      edges_[e].Without(excluded, scratch_);
      bool disjoint = true;
      for (int x : scratch_) {
        if (used.Test(x)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      W cheapest = weights_[scratch_[0]];
      for (int x : scratch_) {
        used.Set(x);
        if (weights_[x] < cheapest) cheapest = weights_[x];
      }
      lower += cheapest;
      if (Prunes(lower)) return;
    }
    std::vector<int> options;
    edges_[branch_edge].Without(excluded, options);
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return weights_[a] < weights_[b];
    });
    std::vector<int> newly_excluded;
    for (int x : options) {
      chosen.Set(x);
      Recurse(chosen, excluded, weight + weights_[x]);
      chosen.Reset(x);
      if (stop_at_first_ && found_) break;
      excluded.Set(x);
      newly_excluded.push_back(x);
    }
    for (int x : newly_excluded) excluded.Reset(x);
  }

  std::vector<Bits> edges_;
  std::vector<W> weights_;
  int n_;
  std::int64_t node_cap_;
  std::int64_t nodes_ = 0;
  bool stop_at_first_ = false;
  bool found_ = false;
  W bound_{};
  W* best_ = nullptr;
  Bits* best_set_ = nullptr;
  std::vector<std::pair<int, int>> unhit_;
  std::vector<int> scratch_;
};

template <typename W>
HittingSetResult Solve(const std::vector<ElementSet>& raw_edges,
                       std::vector<W> weights, const W& infinity, int n,
                       std::int64_t node_cap) {
  // Drop duplicate edges and edges containing another edge.
  std::vector<ElementSet> sorted = raw_edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Bits> edges;
  Bits support(n);
  for (const auto& edge : sorted) {
    Bits b(n);
    for (int x : edge) b.Set(x);
    bool dominated = false;
    for (const auto& kept : edges) {
      if (kept.SubsetOf(b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      support.OrWith(b);
      edges.push_back(std::move(b));
    }
  }
  Search<W> search(std::move(edges), weights, n, node_cap);
  W best = infinity;
  Bits best_set(n);
  HittingSetResult result;
  if (!search.Run(Bits(n), Bits(n), W(0), infinity, false, best, best_set)) {
    throw Error(ErrorCode::kInvalidParams, "hitting set instance infeasible");
  }
  const W optimum = best;

  // Fix elements in increasing id order, keeping each one whenever an
  // optimum containing the current prefix still exists.
  Bits in(n), out(n);
  W in_weight(0);
  std::vector<int> candidates;
  support.Without(Bits(n), candidates);
  for (int x : candidates) {
    W ignored = infinity;
    Bits ignored_set(n);
    Bits none(n);
    for (int y : candidates) {
      if (!in.Test(y)) none.Set(y);
    }
    if (search.Run(in, none, in_weight, optimum, true, ignored, ignored_set)) {
      break;  // the prefix alone already hits every edge
    }
    in.Set(x);
    const W with_x = in_weight + weights[x];
    if (!(optimum < with_x) &&
        search.Run(in, out, with_x, optimum, true, ignored, ignored_set)) {
      in_weight = with_x;
    } else {
      in.Reset(x);
      out.Set(x);
    }
  }
  for (int x : candidates) {
    if (in.Test(x)) result.chosen.push_back(x);
  }
  result.nodes_expanded = search.nodes();
  return result;
}

}  // namespace

HittingSetResult MinWeightHittingSet(const std::vector<ElementSet>& edges,
                                     const WeightedGroundSet& weights,
                                     std::int64_t node_cap) {
  const int n = weights.size();
  for (const auto& edge : edges) {
    if (edge.empty()) {
      throw Error(ErrorCode::kInvalidParams, "empty hyperedge");
    }
    for (int x : edge) {
      if (x < 0 || x >= n) {
        throw Error(ErrorCode::kInvalidParams, "hyperedge element out of range");
      }
    }
  }
  if (edges.empty()) return {{}, Rational(0), 0};
  // Scale to integers over the common denominator.
  mpz_class denominator = 1;
  for (const auto& w : weights.weights()) {
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(),
            w.get_den_mpz_t());
  }
  std::vector<mpz_class> scaled(n);
  mpz_class total = 0;
  for (int i = 0; i < n; ++i) {
    scaled[i] = weights[i].get_num() * (denominator / weights[i].get_den());
    total += scaled[i];
  }
  HittingSetResult result;
  if (total < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small(n);
    for (int i = 0; i < n; ++i) small[i] = scaled[i].get_si();
    result = Solve<std::int64_t>(edges, std::move(small),
                                 total.get_si() + 1, n, node_cap);
  } else {
    result = Solve<mpz_class>(edges, scaled, total + 1, n, node_cap);
  }
  result.weight = weights.WeightOf(result.chosen);
  return result;
}

}  // namespace ctlsets
