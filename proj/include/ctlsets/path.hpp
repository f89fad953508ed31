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

#ifndef CTLSETS_PATH_HPP_
#define CTLSETS_PATH_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "ctlsets/core.hpp"
#include "ctlsets/graph.hpp"

namespace ctlsets {

enum class PathMethod { kExactBruteForce, kFlowApprox, kVerifiedInput };
std::string_view PathMethodName(PathMethod method);

struct PathIdentifyResult {
  ElementSet identifying_set;
  Rational total_weight;
  PathMethod method = PathMethod::kExactBruteForce;
  // Guaranteed size ratio, sqrt(|E|), for the flow-based approximation.
  std::optional<double> approx_bound;
};

struct PathVerification {
  bool identifying = true;
  // Two distinct s-t paths (sorted arc ids) with the same trace on S.
  ElementSet path_a;
  ElementSet path_b;
};

struct PathCaps {
  std::int64_t max_paths = 100000;
  std::int64_t max_subsets = std::int64_t{1} << 24;
};

// Polynomial check for acyclic graphs: S identifies the s-t paths iff, after
// discarding nodes on no s-t path, the arcs outside S reachable from any node
// v form an arborescence rooted at v. Throws kNotAcyclic and kNoStPath.
PathVerification VerifyPathIdentifyingDag(const Digraph& g, StPair st,
                                          const ElementSet& s_set);

// Brute force over all simple s-t paths; works on any digraph.
PathVerification VerifyPathIdentifyingGeneral(const Digraph& g, StPair st,
                                              const ElementSet& s_set,
                                              std::int64_t max_paths);

// Exact minimum-weight identifying set: every pair of distinct paths must be
// hit inside its symmetric difference. Ties go to the lexicographically
// smallest set.
PathIdentifyResult ExactMinPathIdentifying(const Digraph& g, StPair st,
                                           const WeightedGroundSet& weights,
                                           const PathCaps& caps = {});

// Minimum-weight flow-identifying set, which also identifies the paths.
PathIdentifyResult ApproxMinPathIdentifyingDag(const Digraph& g, StPair st,
                                               const WeightedGroundSet& weights);

struct GapRatio {
  Rational ratio;  // |flow set| / |optimum|, 1 when both are empty
  int approx_size = 0;
  int optimum_size = 0;
  // |flow set| <= (|opt| + 1) |opt| / 2
  bool within_bound = true;
};

GapRatio ComputeGapRatio(const Digraph& g, StPair st, const PathCaps& caps = {});

}  // namespace ctlsets

#endif  // CTLSETS_PATH_HPP_
