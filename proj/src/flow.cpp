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

#include "ctlsets/flow.hpp"

#include <algorithm>

namespace ctlsets {
namespace {

void CheckFlowInstance(const Digraph& g, StPair st) {
  ValidateStPair(g, st);
  RequireNoSelfLoops(g);
  if (!ForwardReach(g, st.source, AllArcs(g))[st.sink]) {
    throw Error(ErrorCode::kNoStPath, "t is not reachable from s");
  }
}

ElementSet RelevantArcsUnchecked(const Digraph& g, StPair st) {
  const auto comp = StronglyConnectedComponents(g);
  const auto from_s = ForwardReach(g, st.source, AllArcs(g));
  const auto to_t = BackwardReach(g, st.sink, AllArcs(g));
  ElementSet relevant;
  for (int id = 0; id < g.arc_count(); ++id) {
    const Arc& a = g.arc(id);
    if (comp[a.tail] == comp[a.head] || (from_s[a.tail] && to_t[a.head])) {
      relevant.push_back(id);
    }
  }
  return relevant;
}

// A unit flow that is positive on `arc`, which must be relevant.
RationalVector FlowThrough(const Digraph& g, StPair st,
                           const std::vector<int>& comp, int arc) {
  const auto all = AllArcs(g);
  RationalVector x(g.arc_count(), Rational(0));
  auto add = [&](const std::vector<int>& arcs) {
    for (int id : arcs) x[id] += 1;
  };
  const Arc& a = g.arc(arc);
  if (comp[a.tail] == comp[a.head]) {
    add(*FindPath(g, st.source, st.sink, all));
    add(*FindPath(g, a.head, a.tail, all));
    x[arc] += 1;
  } else {
    add(*FindPath(g, st.source, a.tail, all));
    x[arc] += 1;
    add(*FindPath(g, a.head, st.sink, all));
  }
  return x;
}

}  // namespace

ElementSet RelevantArcs(const Digraph& g, StPair st) {
  CheckFlowInstance(g, st);
  return RelevantArcsUnchecked(g, st);
}

FlowIdentifyResult MinWeightFlowIdentifying(const Digraph& g, StPair st,
                                            const WeightedGroundSet& weights) {
  CheckFlowInstance(g, st);
  if (weights.size() != g.arc_count()) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  FlowIdentifyResult result;
  result.relevant_arcs = RelevantArcsUnchecked(g, st);
  result.forest = SpanningForestMaxWeight(g, result.relevant_arcs, weights);
  result.identifying_set = Difference(result.relevant_arcs, result.forest);
  result.total_weight = weights.WeightOf(result.identifying_set);
  return result;
}

FlowVerification VerifyFlowIdentifying(const Digraph& g, StPair st,
                                       const ElementSet& s_set) {
  CheckFlowInstance(g, st);
  const ElementSet s = NormalizeSet(s_set, g.arc_count());
  const ElementSet free_arcs = Difference(RelevantArcsUnchecked(g, st), s);
  FlowVerification out;
  auto cycle = FindUndirectedCycle(g, free_arcs);
  if (!cycle) return out;
  out.identifying = false;
  out.cycle = std::move(*cycle);

  // Average of flows that are positive on each cycle arc, then push flow
  // around the cycle until a backward arc hits zero.
  const auto comp = StronglyConnectedComponents(g);
  RationalVector x(g.arc_count(), Rational(0));
  for (const auto& step : out.cycle) {
    const auto part = FlowThrough(g, st, comp, step.arc);
    for (int id = 0; id < g.arc_count(); ++id) x[id] += part[id];
  }
  const Rational scale(1, static_cast<long>(out.cycle.size()));
  for (auto& v : x) v *= scale;
  Rational eps = -1;
  for (const auto& step : out.cycle) {
    if (!step.forward && (eps < 0 || x[step.arc] < eps)) eps = x[step.arc];
  }
  if (eps < 0) eps = 1;  // directed cycle: any step stays feasible
  RationalVector y = x;
  for (const auto& step : out.cycle) {
    y[step.arc] += step.forward ? eps : -eps;
  }
  out.flow_a = std::move(x);
  out.flow_b = std::move(y);
  return out;
}

bool IsUnitStFlow(const Digraph& g, StPair st, const RationalVector& x) {
  if (static_cast<int>(x.size()) != g.arc_count()) return false;
  std::vector<Rational> balance(g.node_count(), Rational(0));
  for (int id = 0; id < g.arc_count(); ++id) {
    if (x[id] < 0) return false;
    balance[g.arc(id).tail] -= x[id];
    balance[g.arc(id).head] += x[id];
  }
  for (int v = 0; v < g.node_count(); ++v) {
    const Rational want = v == st.source ? -1 : v == st.sink ? 1 : 0;
    if (balance[v] != want) return false;
  }
  return true;
}

std::vector<RationalVector> FlowPolytopeAffineBasis(const Digraph& g,
                                                    StPair st) {
  CheckFlowInstance(g, st);
  const ElementSet relevant = RelevantArcsUnchecked(g, st);
  const auto comp = StronglyConnectedComponents(g);
  RationalVector x0(g.arc_count(), Rational(0));
  for (int arc : relevant) {
    const auto part = FlowThrough(g, st, comp, arc);
    for (int id = 0; id < g.arc_count(); ++id) x0[id] += part[id];
  }
  const Rational scale(1, static_cast<long>(relevant.size()));
  for (auto& v : x0) v *= scale;

  std::vector<RationalVector> points{x0};
  const ElementSet forest =
      SpanningForestMaxWeight(g, relevant, WeightedGroundSet::Unit(g.arc_count()));
  for (int arc : Difference(relevant, forest)) {
    ElementSet arcs = forest;
    arcs.insert(std::lower_bound(arcs.begin(), arcs.end(), arc), arc);
    const auto cycle = FindUndirectedCycle(g, arcs);
    Rational eps = 1;
    for (const auto& step : *cycle) {
      if (!step.forward && x0[step.arc] < eps) eps = x0[step.arc];
    }
    RationalVector y = x0;
    for (const auto& step : *cycle) y[step.arc] += step.forward ? eps : -eps;
    points.push_back(std::move(y));
  }
  return points;
}

}  // namespace ctlsets
