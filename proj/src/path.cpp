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

#include "ctlsets/path.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ctlsets/flow.hpp"
#include "ctlsets/hitting_set.hpp"

namespace ctlsets {

std::string_view PathMethodName(PathMethod method) {
  switch (method) {
    case PathMethod::kExactBruteForce: return "exact-bruteforce";
    case PathMethod::kFlowApprox: return "flow-approx";
    case PathMethod::kVerifiedInput: return "verified-input";
  }
  return "unknown";
}

namespace {

void RequireDag(const Digraph& g) {
  if (!IsAcyclic(g)) throw Error(ErrorCode::kNotAcyclic, "graph has a cycle");
}

ElementSet Concat(std::initializer_list<const std::vector<int>*> parts) {
  ElementSet out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

// v -> w path in the BFS tree described by `via`.
std::vector<int> TreePath(const Digraph& g, const std::vector<int>& via,
                          int root, int w) {
  std::vector<int> path;
  for (int v = w; v != root; v = g.arc(via[v]).tail) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

PathVerification VerifyPathIdentifyingDag(const Digraph& g, StPair st,
                                          const ElementSet& s_set) {
  ValidateStPair(g, st);
  RequireDag(g);
  const ElementSet s = NormalizeSet(s_set, g.arc_count());
  const auto from_s = ForwardReach(g, st.source, AllArcs(g));
  const auto to_t = BackwardReach(g, st.sink, AllArcs(g));
  if (!from_s[st.sink]) {
    throw Error(ErrorCode::kNoStPath, "t is not reachable from s");
  }
  // Prune to arcs on some s-t path; in a DAG that is exactly the arcs whose
  // tail is reachable from s and whose head reaches t.
  std::vector<char> kept(g.arc_count(), 0), free_arcs(g.arc_count(), 0);
  for (int id = 0; id < g.arc_count(); ++id) {
    kept[id] = from_s[g.arc(id).tail] && to_t[g.arc(id).head];
    free_arcs[id] = kept[id] && !Contains(s, id);
  }
  PathVerification out;
  std::vector<int> via(g.node_count());
  std::vector<char> seen(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    if (!from_s[v] || !to_t[v]) continue;
    std::fill(via.begin(), via.end(), -1);
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> queue = {v};
    seen[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int id : g.out_arcs(u)) {
        if (!free_arcs[id]) continue;
        const int w = g.arc(id).head;
        if (!seen[w]) {
          seen[w] = 1;
          via[w] = id;
          queue.push_back(w);
          continue;
        }
        // w has in-degree two among the arcs reachable from v.
        std::vector<int> first = TreePath(g, via, v, w);
        std::vector<int> second = TreePath(g, via, v, u);
        second.push_back(id);
        const auto prefix = *FindPath(g, st.source, v, kept);
        const auto suffix = *FindPath(g, w, st.sink, kept);
        out.identifying = false;
        out.path_a = Concat({&prefix, &first, &suffix});
        out.path_b = Concat({&prefix, &second, &suffix});
        if (out.path_b < out.path_a) std::swap(out.path_a, out.path_b);
        return out;
      }
    }
  }
  return out;
}

PathVerification VerifyPathIdentifyingGeneral(const Digraph& g, StPair st,
                                              const ElementSet& s_set,
                                              std::int64_t max_paths) {
  RequireNoSelfLoops(g);
  const ElementSet s = NormalizeSet(s_set, g.arc_count());
  const auto paths = EnumerateStPaths(g, st, max_paths);
  std::map<ElementSet, std::size_t> seen;
  PathVerification out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto [it, inserted] = seen.emplace(Intersection(paths[i], s), i);
    if (!inserted) {
      out.identifying = false;
      out.path_a = paths[it->second];
      out.path_b = paths[i];
      return out;
    }
  }
  return out;
}

PathIdentifyResult ExactMinPathIdentifying(const Digraph& g, StPair st,
                                           const WeightedGroundSet& weights,
                                           const PathCaps& caps) {
  RequireNoSelfLoops(g);
  if (weights.size() != g.arc_count()) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  const auto paths = EnumerateStPaths(g, st, caps.max_paths);
  std::vector<ElementSet> demands;
  demands.reserve(paths.size() * (paths.size() - (paths.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      ElementSet diff;
      std::set_symmetric_difference(paths[i].begin(), paths[i].end(),
                                    paths[j].begin(), paths[j].end(),
                                    std::back_inserter(diff));
      demands.push_back(std::move(diff));
    }
  }
  const auto hit = MinWeightHittingSet(demands, weights, caps.max_subsets);
  PathIdentifyResult result;
  result.identifying_set = hit.chosen;
  result.total_weight = hit.weight;
  result.method = PathMethod::kExactBruteForce;
  return result;
}

PathIdentifyResult ApproxMinPathIdentifyingDag(const Digraph& g, StPair st,
                                               const WeightedGroundSet& weights) {
  ValidateStPair(g, st);
  RequireDag(g);
  const auto flow = MinWeightFlowIdentifying(g, st, weights);
  PathIdentifyResult result;
  result.identifying_set = flow.identifying_set;
  result.total_weight = flow.total_weight;
  result.method = PathMethod::kFlowApprox;
  result.approx_bound = std::sqrt(static_cast<double>(g.arc_count()));
  return result;
}

GapRatio ComputeGapRatio(const Digraph& g, StPair st, const PathCaps& caps) {
  const auto unit = WeightedGroundSet::Unit(g.arc_count());
  const auto approx = ApproxMinPathIdentifyingDag(g, st, unit);
  const auto exact = ExactMinPathIdentifying(g, st, unit, caps);
  GapRatio gap;
  gap.approx_size = static_cast<int>(approx.identifying_set.size());
  gap.optimum_size = static_cast<int>(exact.identifying_set.size());
  gap.ratio = gap.optimum_size == 0
                  ? Rational(1)
                  : Rational(gap.approx_size, gap.optimum_size);
  gap.ratio.canonicalize();
  gap.within_bound =
      2 * gap.approx_size <= (gap.optimum_size + 1) * gap.optimum_size;
  return gap;
}

}  // namespace ctlsets
