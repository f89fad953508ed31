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

#ifndef CTLSETS_FLOW_HPP_
#define CTLSETS_FLOW_HPP_

#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/graph.hpp"
#include "ctlsets/linalg.hpp"

namespace ctlsets {

// Identifying sets for the polytope of unit s-t flows. A set S identifies
// the flows exactly when the relevant arcs outside S form an undirected
// forest, so minimum-weight sets are complements of maximum-weight spanning
// forests of the relevant arcs.

struct FlowIdentifyResult {
  ElementSet identifying_set;  // S
  ElementSet relevant_arcs;    // arcs on an s-t path or a directed cycle
  ElementSet forest;           // relevant_arcs \ S
  Rational total_weight;
};

struct FlowVerification {
  bool identifying = true;
  // Populated when not identifying: an undirected cycle avoiding S and two
  // distinct unit flows that agree on every arc of S.
  std::vector<OrientedArc> cycle;
  RationalVector flow_a;
  RationalVector flow_b;
};

// Arcs on some directed cycle or some s-t path. Throws kNoStPath.
ElementSet RelevantArcs(const Digraph& g, StPair st);

FlowIdentifyResult MinWeightFlowIdentifying(const Digraph& g, StPair st,
                                            const WeightedGroundSet& weights);

FlowVerification VerifyFlowIdentifying(const Digraph& g, StPair st,
                                       const ElementSet& s_set);

// Nonnegative, conserves flow at every node other than s and t, and ships
// exactly one unit from s to t.
bool IsUnitStFlow(const Digraph& g, StPair st, const RationalVector& x);

// Affinely independent unit flows spanning the affine hull of all unit
// flows: a flow positive on every relevant arc, followed by one point per
// fundamental cycle of the relevant arcs.
std::vector<RationalVector> FlowPolytopeAffineBasis(const Digraph& g,
                                                    StPair st);

}  // namespace ctlsets

#endif  // CTLSETS_FLOW_HPP_
