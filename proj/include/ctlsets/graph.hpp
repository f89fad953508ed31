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

#ifndef CTLSETS_GRAPH_HPP_
#define CTLSETS_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ctlsets/core.hpp"

namespace ctlsets {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed multigraph with dense arc ids 0..arc_count()-1. Immutable after
// construction. Parallel arcs and self-loops are stored as given; the flow
// and path solvers reject self-loops through RequireNoSelfLoops().
class Digraph {
 public:
  Digraph() = default;
  Digraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int id) const { return arcs_[id]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  // Arc ids leaving / entering a node, in increasing id order.
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }
  const std::vector<int>& in_arcs(int node) const { return in_[node]; }
  bool HasSelfLoop() const;

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct StPair {
  int source = 0;
  int sink = 0;
};

void ValidateStPair(const Digraph& g, StPair st);
void RequireNoSelfLoops(const Digraph& g);

class UnionFind {
 public:
  explicit UnionFind(int n);
  int Find(int x);
  // Returns false if x and y were already joined.
  bool Unite(int x, int y);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// Component id per node; ids are dense, starting at 0.
std::vector<int> StronglyConnectedComponents(const Digraph& g);

struct TopologicalOrderResult {
  bool acyclic = false;
  std::vector<int> order;  // nodes in topological order (acyclic only)
  std::vector<int> rank;   // rank[node] = position in order (acyclic only)
  std::vector<int> cycle;  // arc ids of a directed cycle (cyclic only)
};

TopologicalOrderResult TopologicalOrder(const Digraph& g);
bool IsAcyclic(const Digraph& g);

// Masks over arc ids: allowed[a] != 0 means arc a may be used.
std::vector<char> AllArcs(const Digraph& g);
std::vector<char> ForwardReach(const Digraph& g, int start,
                               const std::vector<char>& allowed);
std::vector<char> BackwardReach(const Digraph& g, int target,
                                const std::vector<char>& allowed);

// Nodes reachable from start using only arcs in `allowed` (start included).
ElementSet ReachableFrom(const Digraph& g, int start, const ElementSet& allowed);

// Breadth-first directed path from `from` to `to` over allowed arcs, as an
// arc sequence; ties go to the smaller arc id. Empty optional if none.
std::optional<std::vector<int>> FindPath(const Digraph& g, int from, int to,
                                         const std::vector<char>& allowed);

// Maximum-weight spanning forest of the undirected multigraph formed by the
// arcs in `restrict`; weight ties favour the smaller arc id.
ElementSet SpanningForestMaxWeight(const Digraph& g, const ElementSet& restrict,
                                   const WeightedGroundSet& weights);

// One step of an undirected cycle: the arc and whether it is traversed from
// tail to head.
struct OrientedArc {
  int arc = 0;
  bool forward = true;
};

// Some undirected cycle inside `arcs` (a parallel pair or self-loop counts),
// or nullopt when `arcs` is a forest.
std::optional<std::vector<OrientedArc>> FindUndirectedCycle(
    const Digraph& g, const ElementSet& arcs);

// All simple directed s-t paths as sorted arc-id sets, in lexicographic
// order. Throws kPathExplosion once more than `cap` paths are found.
std::vector<ElementSet> EnumerateStPaths(const Digraph& g, StPair st,
                                         std::int64_t cap);

}  // namespace ctlsets

#endif  // CTLSETS_GRAPH_HPP_
