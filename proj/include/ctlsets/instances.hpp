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

#ifndef CTLSETS_INSTANCES_HPP_
#define CTLSETS_INSTANCES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctlsets/core.hpp"
#include "ctlsets/graph.hpp"

namespace ctlsets {

struct InstanceMeta {
  std::string construction;
  std::map<std::string, std::string> params;
  std::map<std::string, ElementSet> arc_sets;
  std::map<std::string, int> labels;  // label -> arc id
};

struct GeneratedInstance {
  Digraph graph;
  StPair st;
  InstanceMeta meta;
};

// Nodes v0..v(2k+1) with s = v0 and t = v(2k+1); arcs (v2i, v2j+1) for
// 0 <= i <= j <= k followed by the marked arcs e_i = (v(2i-1), v2i).
GeneratedInstance GenTightGapFamily(int k);

struct UndirectedGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Arc and node numbering of the vertex cover DAG. Nodes: s = 0, t = 1,
// u_e = 2 + e, v_i = 2 + |E| + v * copies + i. Arcs: (s, u_e) per edge,
// then (u_e, v_i) by edge, endpoint (first, second) and copy, then (v_i, t)
// by copy and vertex.
class VertexCoverLayout {
 public:
  VertexCoverLayout(const UndirectedGraph& base, int copies);

  int copies() const { return copies_; }
  int SourceArc(int edge) const { return edge; }
  int MiddleArc(int edge, int side, int copy) const {
    return edges_ + (edge * 2 + side) * copies_ + copy;
  }
  int SinkArc(int vertex, int copy) const {
    return edges_ + 2 * edges_ * copies_ + copy * vertices_ + vertex;
  }
  int VertexNode(int vertex, int copy) const {
    return 2 + edges_ + vertex * copies_ + copy;
  }
  int node_count() const { return 2 + edges_ + vertices_ * copies_; }
  int arc_count() const { return edges_ + 2 * edges_ * copies_ + vertices_ * copies_; }

 private:
  int vertices_;
  int edges_;
  int copies_;
};

// Throws kInvalidParams for an empty edge set, self-loops, or copies < 1.
GeneratedInstance GenVertexCoverDag(const UndirectedGraph& base, int copies);

struct VertexCoverExtraction {
  ElementSet normalized;           // S', free of (u_e, v_i) arcs
  std::vector<ElementSet> covers;  // U_i per copy
  bool all_cover = true;           // every U_i covers the base graph
};

// Rewrites an identifying set S until it uses no (u_e, v_i) arc without
// growing, then reads off U_i = {v : (v_i, t) in S'}. Each rewrite is
// checked to keep the set identifying. Throws kNotIdentifying for a bad S
// and kRewriteStuck when no checked rewrite applies.
VertexCoverExtraction ExtractVertexCover(const UndirectedGraph& base,
                                         int copies, const ElementSet& s_set);

bool IsVertexCover(const UndirectedGraph& g, const ElementSet& cover);

// Replaces `arc` by `bundle_size` parallel copies placed at its position.
GeneratedInstance GenBundleInstance(const Digraph& base, StPair st, int arc,
                                    int bundle_size);

// Arcs follow a random node permutation; s and t are its endpoints.
GeneratedInstance GenRandomDag(int nodes, double arc_prob, std::uint64_t seed);
// Any ordered pair of distinct nodes may become an arc.
GeneratedInstance GenRandomDigraph(int nodes, double arc_prob,
                                   std::uint64_t seed);

}  // namespace ctlsets

#endif  // CTLSETS_INSTANCES_HPP_
