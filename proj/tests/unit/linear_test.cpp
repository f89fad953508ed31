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

#include "ctlsets/linear.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ctlsets/flow.hpp"
#include "ctlsets/instances.hpp"
#include "oracles.hpp"

namespace ctlsets {
namespace {

const AffineBasis kParallel({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});

TEST(AffineBasisTest, RejectsBadInput) {
  EXPECT_THROW(AffineBasis({}), Error);
  EXPECT_THROW(AffineBasis({{Rational(1)}, {Rational(1), Rational(2)}}), Error);
  EXPECT_THROW(AffineBasis({{Rational(0), Rational(0)},
                            {Rational(1), Rational(1)},
                            {Rational(2), Rational(2)}}),
               Error);
}

TEST(AffineBasisTest, HullMembership) {
  EXPECT_EQ(kParallel.k(), 1);
  EXPECT_EQ(kParallel.dimension(), 2);
  EXPECT_TRUE(kParallel.InAffineHull({Rational(1, 3), Rational(2, 3)}));
  EXPECT_TRUE(kParallel.InAffineHull({Rational(3), Rational(-2)}));
  EXPECT_FALSE(kParallel.InAffineHull({Rational(1), Rational(1)}));
  const AffineBasis point({{Rational(2), Rational(3)}});
  EXPECT_TRUE(point.InAffineHull({Rational(2), Rational(3)}));
  EXPECT_FALSE(point.InAffineHull({Rational(2), Rational(4)}));
}

TEST(AxIndependentTest, Examples) {
  EXPECT_TRUE(AxIndependent(kParallel, {0}));
  EXPECT_FALSE(AxIndependent(kParallel, {0, 1}));
  const AffineBasis point({{Rational(5), Rational(1), Rational(0)}});
  EXPECT_TRUE(AxIndependent(point, {0, 1, 2}));
}

TEST(MinWeightFromBasisTest, ParallelArcs) {
  const auto r = MinWeightIdentifyingFromBasis(kParallel,
                                               WeightedGroundSet({Rational(1), Rational(5)}));
  EXPECT_EQ(r.independent_set, (ElementSet{1}));
  EXPECT_EQ(r.identifying_set, (ElementSet{0}));
  EXPECT_EQ(r.total_weight, 1);
}

TEST(MinWeightFromBasisTest, SinglePoint) {
  const AffineBasis point({{Rational(1), Rational(0), Rational(1)}});
  EXPECT_TRUE(MinWeightIdentifyingFromBasis(point, WeightedGroundSet::Unit(3))
                  .identifying_set.empty());
}

TEST(MinWeightFromBasisTest, TightGapOnePicksLightestArc) {
  const auto inst = GenTightGapFamily(1);
  const AffineBasis basis(FlowPolytopeAffineBasis(inst.graph, inst.st));
  EXPECT_EQ(basis.k(), 1);
  const auto r = MinWeightIdentifyingFromBasis(
      basis, WeightedGroundSet({Rational(3), Rational(2), Rational(4), Rational(1)}));
  EXPECT_EQ(r.identifying_set, (ElementSet{3}));
  EXPECT_EQ(r.total_weight, 1);
}

TEST(VerifyFromBasisTest, Examples) {
  const auto v = VerifyIdentifyingFromBasis(kParallel, {});
  ASSERT_FALSE(v.identifying);
  ASSERT_EQ(v.direction.size(), 2u);
  EXPECT_NE(v.direction[0], 0);
  EXPECT_EQ(v.direction[0], -v.direction[1]);
  EXPECT_TRUE(VerifyIdentifyingFromBasis(kParallel, {0}).identifying);
  EXPECT_TRUE(VerifyIdentifyingFromBasis(kParallel, {0, 1}).identifying);
}

TEST(LinearPropertiesTest, FlowPolytopesMatchFlowModule) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 80; ++seed) {
    const auto inst = GenRandomDigraph(5, 0.35, seed);
    const auto& g = inst.graph;
    std::vector<oracle::SimpleArc> simple;
    for (const auto& a : g.arcs()) simple.push_back({a.tail, a.head});
    if (oracle::StPathMasks(5, simple, inst.st.source, inst.st.sink).empty()) continue;
    ++checked;
    const AffineBasis basis(FlowPolytopeAffineBasis(g, inst.st));
    std::vector<Rational> weights;
    for (int i = 0; i < g.arc_count(); ++i) weights.emplace_back(static_cast<long>(1 + rng() % 5));
    const WeightedGroundSet w(weights);
    const auto r = MinWeightIdentifyingFromBasis(basis, w);
    EXPECT_EQ(static_cast<int>(r.identifying_set.size()), basis.k());
    EXPECT_EQ(r.total_weight, MinWeightFlowIdentifying(g, inst.st, w).total_weight);
    EXPECT_TRUE(VerifyIdentifyingFromBasis(basis, r.identifying_set).identifying);

    for (int trial = 0; trial < 20; ++trial) {
      const ElementSet s = FromMask(rng() & ((std::uint64_t{1} << g.arc_count()) - 1));
      const auto v = VerifyIdentifyingFromBasis(basis, s);
      EXPECT_EQ(v.identifying, VerifyFlowIdentifying(g, inst.st, s).identifying);
      if (v.identifying) continue;
      EXPECT_NE(v.direction, RationalVector(g.arc_count(), Rational(0)));
      for (int e : s) EXPECT_EQ(v.direction[e], 0);
      RationalVector moved = basis.points()[0];
      for (int e = 0; e < g.arc_count(); ++e) moved[e] += Rational(7, 3) * v.direction[e];
      EXPECT_TRUE(basis.InAffineHull(moved));
    }
  }
}

}  // namespace
}  // namespace ctlsets
