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

#include "ctlsets/matroid.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace ctlsets {

MatroidOracle::MatroidOracle(int ground_size, IndependenceFn is_independent,
                             std::string name)
    : ground_size_(ground_size),
      is_independent_(std::move(is_independent)),
      name_(std::move(name)) {
  if (ground_size_ < 0) {
    throw Error(ErrorCode::kInvalidParams, "negative ground set size");
  }
}

bool MatroidOracle::IsIndependent(const ElementSet& set) const {
  for (int e : set) {
    if (e < 0 || e >= ground_size_) {
      throw Error(ErrorCode::kInvalidParams, "element out of range");
    }
  }
  return is_independent_(set);
}

int MatroidOracle::Rank(const ElementSet& set) const {
  ElementSet independent;
  for (int e : set) {
    independent.push_back(e);
    std::sort(independent.begin(), independent.end());
    if (!IsIndependent(independent)) {
      independent.erase(
          std::find(independent.begin(), independent.end(), e));
    }
  }
  return static_cast<int>(independent.size());
}

MatroidOracle UniformMatroid(int rank, int size) {
  if (size < 0 || rank < 0 || rank > size) {
    throw Error(ErrorCode::kInvalidParams, "uniform matroid needs 0 <= k <= n");
  }
  MatroidOracle m(
      size,
      [rank](const ElementSet& set) {
        return static_cast<int>(set.size()) <= rank;
      },
      "uniform(" + std::to_string(rank) + "," + std::to_string(size) + ")");
  SpotCheckMatroid(m, 16, 1);
  return m;
}

MatroidOracle GraphicMatroid(const Digraph& g) {
  MatroidOracle m(
      g.arc_count(),
      [g](const ElementSet& set) {
        UnionFind uf(g.node_count());
        for (int id : set) {
          if (!uf.Unite(g.arc(id).tail, g.arc(id).head)) return false;
        }
        return true;
      },
      "graphic");
  SpotCheckMatroid(m, 16, 1);
  return m;
}

MatroidOracle PartitionMatroid(const std::vector<ElementSet>& blocks,
                               const std::vector<int>& capacities) {
  if (blocks.size() != capacities.size()) {
    throw Error(ErrorCode::kInvalidParams, "one capacity per block required");
  }
  int size = 0;
  for (const auto& b : blocks) size += static_cast<int>(b.size());
  std::vector<int> block_of(size, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (capacities[i] < 0) {
      throw Error(ErrorCode::kInvalidParams, "negative block capacity");
    }
    for (int e : blocks[i]) {
      if (e < 0 || e >= size || block_of[e] != -1) {
        throw Error(ErrorCode::kInvalidParams,
                    "blocks must partition 0..n-1");
      }
      block_of[e] = static_cast<int>(i);
    }
  }
  MatroidOracle m(
      size,
      [block_of, capacities](const ElementSet& set) {
        std::vector<int> used(capacities.size(), 0);
        for (int e : set) {
          if (++used[block_of[e]] > capacities[block_of[e]]) return false;
        }
        return true;
      },
      "partition");
  SpotCheckMatroid(m, 16, 1);
  return m;
}

MatroidOracle FreeMatroid(int size) {
  return MatroidOracle(size, [](const ElementSet&) { return true; }, "free");
}

void SpotCheckMatroid(const MatroidOracle& m, int samples, std::uint64_t seed) {
  if (!m.IsIndependent({})) {
    throw Error(ErrorCode::kOracleInconsistent, "empty set is dependent");
  }
  std::mt19937_64 rng(seed);
  const int n = m.ground_size();
  for (int i = 0; i < samples && n > 0; ++i) {
    // Random maximal independent set in a random order, then random subsets.
    std::vector<int> order(n);
    for (int e = 0; e < n; ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    ElementSet independent;
    for (int e : order) {
      ElementSet trial = independent;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
      if (m.IsIndependent(trial)) independent = std::move(trial);
    }
    ElementSet subset;
    for (int e : independent) {
      if (rng() & 1) subset.push_back(e);
    }
    if (!m.IsIndependent(subset)) {
      throw Error(ErrorCode::kOracleInconsistent,
                  "a subset of an independent set is dependent");
    }
  }
}

ElementSet AnyBasis(const MatroidOracle& m) {
  ElementSet basis;
  for (int e = 0; e < m.ground_size(); ++e) {
    basis.push_back(e);
    if (!m.IsIndependent(basis)) basis.pop_back();
  }
  return basis;
}

ElementSet FundamentalCircuit(const MatroidOracle& m, const ElementSet& basis,
                              int element) {
  const ElementSet b = NormalizeSet(basis, m.ground_size());
  if (element < 0 || element >= m.ground_size()) {
    throw Error(ErrorCode::kInvalidParams, "element out of range");
  }
  if (Contains(b, element)) {
    throw Error(ErrorCode::kElementInBasis, "element already in the basis");
  }
  if (!m.IsIndependent(b)) {
    throw Error(ErrorCode::kNotABasis, "set is dependent");
  }
  ElementSet with = b;
  with.insert(std::upper_bound(with.begin(), with.end(), element), element);
  if (m.IsIndependent(with)) {
    throw Error(ErrorCode::kNotABasis, "set is not maximal");
  }
  ElementSet circuit = {element};
  for (int x : b) {
    ElementSet without = with;
    without.erase(std::find(without.begin(), without.end(), x));
    if (m.IsIndependent(without)) circuit.push_back(x);
  }
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

MatroidComponents ComputeMatroidComponents(const MatroidOracle& m) {
  if (!m.IsIndependent({})) {
    throw Error(ErrorCode::kOracleInconsistent, "empty set is dependent");
  }
  const int n = m.ground_size();
  const ElementSet basis = AnyBasis(m);
  UnionFind uf(n);
  for (int e = 0; e < n; ++e) {
    if (Contains(basis, e)) continue;
    const ElementSet circuit = FundamentalCircuit(m, basis, e);
    for (int x : circuit) uf.Unite(e, x);
  }
  std::vector<int> slot(n, -1);
  MatroidComponents out;
  for (int e = 0; e < n; ++e) {
    const int root = uf.Find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.partition.size());
      out.partition.emplace_back();
    }
    out.partition[slot[root]].push_back(e);
  }
  return out;
}

namespace {

// All but the heaviest element of each class with two or more elements;
// among equally heavy elements the smallest id stays out.
ElementSet DropHeaviestPerClass(const std::vector<ElementSet>& classes,
                                const WeightedGroundSet& weights) {
  ElementSet s;
  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;
    int keep = cls.front();
    for (int e : cls) {
      if (weights[e] > weights[keep]) keep = e;
    }
    for (int e : cls) {
      if (e != keep) s.push_back(e);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

MatroidIdentifyResult MinWeightMatroidIdentifying(
    const MatroidOracle& m, const WeightedGroundSet& weights) {
  if (weights.size() != m.ground_size()) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  MatroidIdentifyResult result;
  result.components = ComputeMatroidComponents(m);
  result.identifying_set =
      DropHeaviestPerClass(result.components.partition, weights);
  result.total_weight = weights.WeightOf(result.identifying_set);
  return result;
}

std::vector<ElementSet> EnumerateCircuits(const MatroidOracle& m,
                                          int max_ground) {
  const int n = m.ground_size();
  if (n > max_ground || n > 62) {
    throw Error(ErrorCode::kEnumerationExplosion,
                "ground set too large for circuit enumeration");
  }
  std::vector<ElementSet> circuits;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet set = FromMask(mask);
    if (m.IsIndependent(set)) continue;
    bool minimal = true;
    for (int e : set) {
      if (!m.IsIndependent(FromMask(mask & ~(std::uint64_t{1} << e)))) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(set);
  }
  std::sort(circuits.begin(), circuits.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return circuits;
}

MatroidVerification VerifyMatroidIdentifying(const MatroidOracle& m,
                                             const ElementSet& s_set,
                                             int max_ground) {
  const ElementSet s = NormalizeSet(s_set, m.ground_size());
  MatroidVerification out;
  for (const auto& circuit : EnumerateCircuits(m, max_ground)) {
    const ElementSet outside = Difference(circuit, s);
    if (outside.size() < 2) continue;
    out.identifying = false;
    out.circuit = circuit;
    const int e = outside[0];
    const int f = outside[1];
    // Extend C - f to a basis B; then B + f - e is another basis.
    ElementSet basis = Difference(circuit, {f});
    for (int x = 0; x < m.ground_size(); ++x) {
      if (Contains(basis, x) || x == f) continue;
      ElementSet trial = basis;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), x), x);
      if (m.IsIndependent(trial)) basis = std::move(trial);
    }
    ElementSet other = Difference(basis, {e});
    other.insert(std::upper_bound(other.begin(), other.end(), f), f);
    out.basis_a = std::move(basis);
    out.basis_b = std::move(other);
    return out;
  }
  return out;
}

}  // namespace ctlsets
