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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "oracles.hpp"

namespace ctlsets {
namespace {

using oracle::Mask;

const Digraph kTriangle(3, {{0, 1}, {1, 2}, {2, 0}});

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidParams;
}

std::function<bool(Mask)> MaskOracle(const MatroidOracle& m) {
  return [&m](Mask mask) { return m.IsIndependent(FromMask(mask)); };
}

Mask ToBits(const ElementSet& s) {
  Mask m = 0;
  for (int x : s) m |= Mask{1} << x;
  return m;
}

// Every pair of distinct bases differs on S.
bool SeparatesBases(const std::vector<Mask>& bases, Mask s) {
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if ((bases[i] & s) == (bases[j] & s)) return false;
    }
  }
  return true;
}

TEST(BuiltinMatroidTest, Independence) {
  const auto u = UniformMatroid(2, 3);
  EXPECT_TRUE(u.IsIndependent({0, 1}));
  EXPECT_FALSE(u.IsIndependent({0, 1, 2}));
  const auto g = GraphicMatroid(kTriangle);
  EXPECT_TRUE(g.IsIndependent({0, 2}));
  EXPECT_FALSE(g.IsIndependent({0, 1, 2}));
  const auto p = PartitionMatroid({{0, 1}, {2}}, {1, 1});
  EXPECT_TRUE(p.IsIndependent({0, 2}));
  EXPECT_FALSE(p.IsIndependent({0, 1}));
  EXPECT_TRUE(FreeMatroid(3).IsIndependent({0, 1, 2}));
  EXPECT_EQ(g.Rank({0, 1, 2}), 2);
}

TEST(BuiltinMatroidTest, InvalidParams) {
  EXPECT_EQ(CodeOf([] { UniformMatroid(4, 3); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { PartitionMatroid({{0, 1}}, {1, 2}); }), ErrorCode::kInvalidParams);
}

TEST(SpotCheckTest, RejectsBadOracles) {
  const MatroidOracle empty_dependent(3, [](const ElementSet&) { return false; });
  EXPECT_EQ(CodeOf([&] { SpotCheckMatroid(empty_dependent, 50, 1); }),
            ErrorCode::kOracleInconsistent);
  const MatroidOracle not_hereditary(2, [](const ElementSet& s) { return s != ElementSet{1}; });
  EXPECT_EQ(CodeOf([&] { SpotCheckMatroid(not_hereditary, 200, 1); }),
            ErrorCode::kOracleInconsistent);
  SpotCheckMatroid(UniformMatroid(2, 5), 200, 1);
}

TEST(FundamentalCircuitTest, Examples) {
  EXPECT_EQ(FundamentalCircuit(GraphicMatroid(kTriangle), {0, 1}, 2), (ElementSet{0, 1, 2}));
  EXPECT_EQ(FundamentalCircuit(UniformMatroid(2, 4), {0, 1}, 2), (ElementSet{0, 1, 2}));
  // Two disjoint triangles; arc 2 closes the first.
  const Digraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(FundamentalCircuit(GraphicMatroid(two), {0, 1, 3, 4}, 2), (ElementSet{0, 1, 2}));
}

TEST(FundamentalCircuitTest, Errors) {
  const auto g = GraphicMatroid(kTriangle);
  EXPECT_EQ(CodeOf([&] { FundamentalCircuit(g, {0}, 2); }), ErrorCode::kNotABasis);
  EXPECT_EQ(CodeOf([&] { FundamentalCircuit(g, {0, 1}, 1); }), ErrorCode::kElementInBasis);
}

TEST(MatroidComponentsTest, Examples) {
  const Digraph tri_plus_edge(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  EXPECT_EQ(ComputeMatroidComponents(GraphicMatroid(tri_plus_edge)).partition,
            (std::vector<ElementSet>{{0, 1, 2}, {3}}));
  EXPECT_EQ(ComputeMatroidComponents(UniformMatroid(2, 3)).partition,
            (std::vector<ElementSet>{{0, 1, 2}}));
  EXPECT_EQ(ComputeMatroidComponents(FreeMatroid(3)).partition,
            (std::vector<ElementSet>{{0}, {1}, {2}}));
}

TEST(MinWeightMatroidTest, Examples) {
  const auto tri = MinWeightMatroidIdentifying(
      GraphicMatroid(kTriangle), WeightedGroundSet({Rational(5), Rational(2), Rational(1)}));
  EXPECT_EQ(tri.identifying_set, (ElementSet{1, 2}));
  EXPECT_EQ(tri.total_weight, 3);
  EXPECT_TRUE(MinWeightMatroidIdentifying(FreeMatroid(3), WeightedGroundSet::Unit(3))
                  .identifying_set.empty());
  EXPECT_EQ(MinWeightMatroidIdentifying(UniformMatroid(1, 2), WeightedGroundSet::Unit(2))
                .identifying_set.size(),
            1u);
}

TEST(VerifyMatroidTest, Examples) {
  const auto g = GraphicMatroid(kTriangle);
  const auto v = VerifyMatroidIdentifying(g, {0});
  ASSERT_FALSE(v.identifying);
  EXPECT_EQ(v.circuit, (ElementSet{0, 1, 2}));
  EXPECT_NE(v.basis_a, v.basis_b);
  EXPECT_EQ(Intersection(v.basis_a, {0}), Intersection(v.basis_b, {0}));
  EXPECT_EQ(g.Rank(v.basis_a), 2);
  EXPECT_EQ(g.Rank(v.basis_b), 2);
  EXPECT_TRUE(VerifyMatroidIdentifying(g, {0, 1}).identifying);
  EXPECT_TRUE(VerifyMatroidIdentifying(UniformMatroid(3, 6), {0, 1, 2, 3, 4, 5}).identifying);
  EXPECT_EQ(CodeOf([] { VerifyMatroidIdentifying(FreeMatroid(30), {}, 20); }),
            ErrorCode::kEnumerationExplosion);
}

std::vector<MatroidOracle> SmallMatroids() {
  std::vector<MatroidOracle> out;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) out.push_back(UniformMatroid(k, n));
  }
  out.push_back(FreeMatroid(4));
  out.push_back(PartitionMatroid({{0, 1, 2}, {3, 4}, {5}}, {2, 1, 1}));
  out.push_back(PartitionMatroid({{0, 3}, {1, 4}, {2, 5, 6}}, {1, 0, 2}));
  // Graphs on four nodes: K4, a triangle with pendant and parallel arcs, and
  // a 4-cycle with a loop.
  out.push_back(GraphicMatroid(Digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  out.push_back(GraphicMatroid(Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 3}, {0, 1}})));
  out.push_back(GraphicMatroid(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 1}})));
  return out;
}

TEST(MatroidPropertiesTest, CharacterizationsAgree) {
  std::mt19937_64 rng(9);
  for (const auto& m : SmallMatroids()) {
    const int n = m.ground_size();
    const auto bases = oracle::Bases(n, MaskOracle(m));
    const auto circuits = oracle::Circuits(n, MaskOracle(m));
    std::vector<ElementSet> want;
    for (Mask c : circuits) want.push_back(FromMask(c));
    std::sort(want.begin(), want.end(), [](const ElementSet& a, const ElementSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    EXPECT_EQ(EnumerateCircuits(m), want) << m.name();
    const auto components = ComputeMatroidComponents(m).partition;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const bool by_bases = SeparatesBases(bases, s);
      bool by_components = true;
      for (const auto& c : components) {
        const int outside = static_cast<int>(c.size()) - std::popcount(ToBits(c) & s);
        if (c.size() >= 2 && outside > 1) by_components = false;
      }
      EXPECT_EQ(VerifyMatroidIdentifying(m, FromMask(s)).identifying, by_bases) << m.name();
      EXPECT_EQ(by_components, by_bases) << m.name();
    }
    for (int round = 0; round < 5; ++round) {
      std::vector<Rational> weights;
      for (int i = 0; i < n; ++i) weights.emplace_back(static_cast<long>(1 + rng() % 5));
      const WeightedGroundSet w(weights);
      const auto r = MinWeightMatroidIdentifying(m, w);
      EXPECT_TRUE(SeparatesBases(bases, ToBits(r.identifying_set)));
      Rational best = w.WeightOf(FromMask((Mask{1} << n) - 1));
      for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (SeparatesBases(bases, s)) best = std::min(best, w.WeightOf(FromMask(s)));
      }
      EXPECT_EQ(r.total_weight, best) << m.name();
    }
  }
}

TEST(MatroidPropertiesTest, FundamentalCircuitsAreMinimal) {
  for (const auto& m : SmallMatroids()) {
    const ElementSet basis = AnyBasis(m);
    for (int e = 0; e < m.ground_size(); ++e) {
      if (Contains(basis, e)) continue;
      const auto c = FundamentalCircuit(m, basis, e);
      EXPECT_FALSE(m.IsIndependent(c));
      for (int x : c) {
        EXPECT_TRUE(m.IsIndependent(Difference(c, {x})));
      }
    }
  }
}

}  // namespace
}  // namespace ctlsets
