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

#include "ctlsets/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ctlsets/path.hpp"

namespace ctlsets {
namespace {

// Uniform double in [0, 1) that does not depend on the standard library's
// distribution implementations.
double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<int> Permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

void CheckRandomParams(int nodes, double arc_prob) {
  if (nodes < 2 || !(arc_prob >= 0.0 && arc_prob <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "need nodes >= 2 and 0 <= p <= 1");
  }
}

ElementSet Range(int from, int to) {
  ElementSet out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

ElementSet InsertSorted(ElementSet set, int id) {
  const auto it = std::lower_bound(set.begin(), set.end(), id);
  if (it == set.end() || *it != id) set.insert(it, id);
  return set;
}

ElementSet Erase(ElementSet set, int id) {
  const auto it = std::lower_bound(set.begin(), set.end(), id);
  if (it != set.end() && *it == id) set.erase(it);
  return set;
}

}  // namespace

GeneratedInstance GenTightGapFamily(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "k must be positive");
  std::vector<Arc> arcs;
  for (int i = 0; i <= k; ++i) {
    for (int j = i; j <= k; ++j) arcs.push_back({2 * i, 2 * j + 1});
  }
  GeneratedInstance out;
  const int first_marked = static_cast<int>(arcs.size());
  for (int i = 1; i <= k; ++i) {
    out.meta.labels["e" + std::to_string(i)] = static_cast<int>(arcs.size());
    arcs.push_back({2 * i - 1, 2 * i});
  }
  out.graph = Digraph(2 * k + 2, std::move(arcs));
  out.st = {0, 2 * k + 1};
  out.meta.construction = "tight-gap";
  out.meta.params["k"] = std::to_string(k);
  out.meta.arc_sets["marked"] = Range(first_marked, out.graph.arc_count());
  return out;
}

VertexCoverLayout::VertexCoverLayout(const UndirectedGraph& base, int copies)
    : vertices_(base.vertices),
      edges_(static_cast<int>(base.edges.size())),
      copies_(copies) {
  if (copies < 1) throw Error(ErrorCode::kInvalidParams, "copies must be >= 1");
  if (edges_ == 0) throw Error(ErrorCode::kInvalidParams, "graph has no edges");
  for (const auto& [a, b] : base.edges) {
    if (a < 0 || b < 0 || a >= vertices_ || b >= vertices_ || a == b) {
      throw Error(ErrorCode::kInvalidParams, "bad edge in base graph");
    }
  }
}

GeneratedInstance GenVertexCoverDag(const UndirectedGraph& base, int copies) {
  const VertexCoverLayout layout(base, copies);
  const int m = static_cast<int>(base.edges.size());
  std::vector<Arc> arcs(layout.arc_count());
  GeneratedInstance out;
  auto& labels = out.meta.labels;
  auto vname = [](int v, int i) {
    return "v" + std::to_string(v) + "_" + std::to_string(i + 1);
  };
  for (int e = 0; e < m; ++e) {
    arcs[layout.SourceArc(e)] = {0, 2 + e};
    labels["s-u" + std::to_string(e)] = layout.SourceArc(e);
    const int ends[2] = {base.edges[e].first, base.edges[e].second};
    for (int side = 0; side < 2; ++side) {
      for (int i = 0; i < copies; ++i) {
        const int id = layout.MiddleArc(e, side, i);
        arcs[id] = {2 + e, layout.VertexNode(ends[side], i)};
        labels["u" + std::to_string(e) + "-" + vname(ends[side], i)] = id;
      }
    }
  }
  for (int i = 0; i < copies; ++i) {
    ElementSet copy_arcs;
    for (int v = 0; v < base.vertices; ++v) {
      const int id = layout.SinkArc(v, i);
      arcs[id] = {layout.VertexNode(v, i), 1};
      labels[vname(v, i) + "-t"] = id;
      copy_arcs.push_back(id);
    }
    out.meta.arc_sets["E_" + std::to_string(i + 1)] = copy_arcs;
  }
  out.graph = Digraph(layout.node_count(), std::move(arcs));
  out.st = {0, 1};
  out.meta.construction = "vc-dag";
  out.meta.params["copies"] = std::to_string(copies);
  out.meta.params["vertices"] = std::to_string(base.vertices);
  std::string edge_list;
  for (const auto& [a, b] : base.edges) {
    if (!edge_list.empty()) edge_list += ",";
    edge_list += std::to_string(a) + "-" + std::to_string(b);
  }
  out.meta.params["edges"] = edge_list;
  out.meta.arc_sets["E_s"] = Range(0, m);
  out.meta.arc_sets["E_prime"] = Range(m, m + 2 * m * copies);
  return out;
}

bool IsVertexCover(const UndirectedGraph& g, const ElementSet& cover) {
  for (const auto& [a, b] : g.edges) {
    if (!Contains(cover, a) && !Contains(cover, b)) return false;
  }
  return true;
}

VertexCoverExtraction ExtractVertexCover(const UndirectedGraph& base,
                                         int copies, const ElementSet& s_set) {
  const VertexCoverLayout layout(base, copies);
  const auto inst = GenVertexCoverDag(base, copies);
  const Digraph& g = inst.graph;
  ElementSet s = NormalizeSet(s_set, g.arc_count());
  if (!VerifyPathIdentifyingDag(g, inst.st, s).identifying) {
    throw Error(ErrorCode::kNotIdentifying, "S does not identify the paths");
  }
  const int m = static_cast<int>(base.edges.size());
  auto accept = [&](const ElementSet& candidate) {
    return candidate.size() <= s.size() &&
           VerifyPathIdentifyingDag(g, inst.st, candidate).identifying;
  };

  for (;;) {
    // Smallest middle arc still in S'.
    int edge = -1, side = -1, copy = -1;
    for (int e = 0; e < m && edge < 0; ++e) {
      for (int sd = 0; sd < 2 && edge < 0; ++sd) {
        for (int i = 0; i < copies; ++i) {
          if (Contains(s, layout.MiddleArc(e, sd, i))) {
            edge = e, side = sd, copy = i;
            break;
          }
        }
      }
    }
    if (edge < 0) break;
    const int vertex =
        side == 0 ? base.edges[edge].first : base.edges[edge].second;
    const ElementSet without = Erase(s, layout.MiddleArc(edge, side, copy));

    std::vector<ElementSet> candidates;
    candidates.push_back(InsertSorted(without, layout.SinkArc(vertex, copy)));
    candidates.push_back(InsertSorted(without, layout.SourceArc(edge)));
    for (int other = 0; other < m; ++other) {
      const auto& [a, b] = base.edges[other];
      if (other == edge || (a != vertex && b != vertex)) continue;
      const int other_side = a == vertex ? 0 : 1;
      ElementSet swap = s;
      for (int i = 0; i < copies; ++i) {
        swap = Erase(swap, layout.MiddleArc(edge, side, i));
        swap = Erase(swap, layout.MiddleArc(other, other_side, i));
        swap = InsertSorted(swap, layout.SinkArc(vertex, i));
      }
      swap = InsertSorted(swap, layout.SourceArc(edge));
      swap = InsertSorted(swap, layout.SourceArc(other));
      candidates.push_back(std::move(swap));
    }
    bool rewritten = false;
    for (auto& candidate : candidates) {
      if (accept(candidate)) {
        s = std::move(candidate);
        rewritten = true;
        break;
      }
    }
    if (!rewritten) {
      throw Error(ErrorCode::kRewriteStuck,
                  "no size-preserving rewrite removes a middle arc");
    }
  }

  VertexCoverExtraction out;
  out.normalized = s;
  for (int i = 0; i < copies; ++i) {
    ElementSet cover;
    for (int v = 0; v < base.vertices; ++v) {
      if (Contains(s, layout.SinkArc(v, i))) cover.push_back(v);
    }
    out.all_cover = out.all_cover && IsVertexCover(base, cover);
    out.covers.push_back(std::move(cover));
  }
  return out;
}

GeneratedInstance GenBundleInstance(const Digraph& base, StPair st, int arc,
                                    int bundle_size) {
  ValidateStPair(base, st);
  if (arc < 0 || arc >= base.arc_count()) {
    throw Error(ErrorCode::kInvalidParams, "arc id out of range");
  }
  if (bundle_size < 2) {
    throw Error(ErrorCode::kInvalidParams, "bundle needs at least 2 arcs");
  }
  std::vector<Arc> arcs;
  for (int id = 0; id < base.arc_count(); ++id) {
    const int copies = id == arc ? bundle_size : 1;
    for (int c = 0; c < copies; ++c) arcs.push_back(base.arc(id));
  }
  GeneratedInstance out;
  out.graph = Digraph(base.node_count(), std::move(arcs));
  out.st = st;
  out.meta.construction = "bundle";
  out.meta.params["arc"] = std::to_string(arc);
  out.meta.params["bundle_size"] = std::to_string(bundle_size);
  out.meta.arc_sets["B"] = Range(arc, arc + bundle_size);
  for (int c = 0; c < bundle_size; ++c) {
    out.meta.labels["b" + std::to_string(c + 1)] = arc + c;
  }
  return out;
}

GeneratedInstance GenRandomDag(int nodes, double arc_prob, std::uint64_t seed) {
  CheckRandomParams(nodes, arc_prob);
  std::mt19937_64 rng(seed);
  const auto perm = Permutation(nodes, rng);
  std::vector<Arc> arcs;
  for (int i = 0; i < nodes; ++i) {
    for (int j = i + 1; j < nodes; ++j) {
      if (Uniform(rng) < arc_prob) arcs.push_back({perm[i], perm[j]});
    }
  }
  GeneratedInstance out;
  out.graph = Digraph(nodes, std::move(arcs));
  out.st = {perm.front(), perm.back()};
  out.meta.construction = "random-dag";
  out.meta.params["nodes"] = std::to_string(nodes);
  out.meta.params["arc_prob"] = std::to_string(arc_prob);
  out.meta.params["seed"] = std::to_string(seed);
  return out;
}

GeneratedInstance GenRandomDigraph(int nodes, double arc_prob,
                                   std::uint64_t seed) {
  CheckRandomParams(nodes, arc_prob);
  std::mt19937_64 rng(seed);
  const auto perm = Permutation(nodes, rng);
  std::vector<Arc> arcs;
  for (int u = 0; u < nodes; ++u) {
    for (int v = 0; v < nodes; ++v) {
      if (u != v && Uniform(rng) < arc_prob) arcs.push_back({u, v});
    }
  }
  GeneratedInstance out;
  out.graph = Digraph(nodes, std::move(arcs));
  out.st = {perm.front(), perm.back()};
  out.meta.construction = "random-digraph";
  out.meta.params["nodes"] = std::to_string(nodes);
  out.meta.params["arc_prob"] = std::to_string(arc_prob);
  out.meta.params["seed"] = std::to_string(seed);
  return out;
}

}  // namespace ctlsets
