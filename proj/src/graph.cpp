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

#include "ctlsets/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace ctlsets {

Digraph::Digraph(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  if (node_count_ < 0) {
    throw Error(ErrorCode::kInvalidParams, "negative node count");
  }
  out_.assign(node_count_, {});
  in_.assign(node_count_, {});
  for (int id = 0; id < arc_count(); ++id) {
    const Arc& a = arcs_[id];
    if (a.tail < 0 || a.tail >= node_count_ || a.head < 0 ||
        a.head >= node_count_) {
      throw Error(ErrorCode::kInvalidParams,
                  "arc " + std::to_string(id) + " has an endpoint out of range");
    }
    out_[a.tail].push_back(id);
    in_[a.head].push_back(id);
  }
}

bool Digraph::HasSelfLoop() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.tail == a.head; });
}

void ValidateStPair(const Digraph& g, StPair st) {
  if (st.source < 0 || st.source >= g.node_count() || st.sink < 0 ||
      st.sink >= g.node_count()) {
    throw Error(ErrorCode::kInvalidParams, "s or t is not a node");
  }
  if (st.source == st.sink) {
    throw Error(ErrorCode::kInvalidParams, "s and t must differ");
  }
}

void RequireNoSelfLoops(const Digraph& g) {
  for (int id = 0; id < g.arc_count(); ++id) {
    if (g.arc(id).tail == g.arc(id).head) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at arc " + std::to_string(id));
    }
  }
}

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::Unite(int x, int y) {
  x = Find(x);
  y = Find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

std::vector<int> StronglyConnectedComponents(const Digraph& g) {
  // Iterative Tarjan.
  const int n = g.node_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;
  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> calls;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    calls.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      Frame& f = calls.back();
      const auto& out = g.out_arcs(f.node);
      if (f.edge < out.size()) {
        const int w = g.arc(out[f.edge++]).head;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const int v = f.node;
      calls.pop_back();
      if (!calls.empty()) {
        low[calls.back().node] = std::min(low[calls.back().node], low[v]);
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
    }
  }
  return comp;
}

TopologicalOrderResult TopologicalOrder(const Digraph& g) {
  const int n = g.node_count();
  TopologicalOrderResult result;
  for (int id = 0; id < g.arc_count(); ++id) {
    if (g.arc(id).tail == g.arc(id).head) {
      result.cycle = {id};
      return result;
    }
  }
  std::vector<int> indegree(n, 0);
  for (const Arc& a : g.arcs()) ++indegree[a.head];
  // Kahn with a min-heap-free queue; nodes enter in increasing id order.
  std::deque<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    result.order.push_back(v);
    for (int id : g.out_arcs(v)) {
      if (--indegree[g.arc(id).head] == 0) ready.push_back(g.arc(id).head);
    }
  }
  if (static_cast<int>(result.order.size()) == n) {
    result.acyclic = true;
    result.rank.assign(n, 0);
    for (int i = 0; i < n; ++i) result.rank[result.order[i]] = i;
    return result;
  }
  // Every unprocessed node keeps an unprocessed predecessor; walking
  // backwards must revisit a node.
  result.order.clear();
  int v = 0;
  while (indegree[v] == 0) ++v;
  std::vector<int> seen_at(n, -1);
  std::vector<int> walk_arcs;
  while (seen_at[v] == -1) {
    seen_at[v] = static_cast<int>(walk_arcs.size());
    int chosen = -1;
    for (int id : g.in_arcs(v)) {
      if (indegree[g.arc(id).tail] > 0) {
        chosen = id;
        break;
      }
    }
    walk_arcs.push_back(chosen);
    v = g.arc(chosen).tail;
  }
  // walk_arcs[seen_at[v]..] traverses the cycle backwards.
  std::vector<int> cycle(walk_arcs.begin() + seen_at[v], walk_arcs.end());
  std::reverse(cycle.begin(), cycle.end());
  result.cycle = std::move(cycle);
  return result;
}

bool IsAcyclic(const Digraph& g) { return TopologicalOrder(g).acyclic; }

std::vector<char> AllArcs(const Digraph& g) {
  return std::vector<char>(g.arc_count(), 1);
}

namespace {

std::vector<char> Sweep(const Digraph& g, int start,
                        const std::vector<char>& allowed, bool forward) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<int> todo = {start};
  seen[start] = 1;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (int id : forward ? g.out_arcs(v) : g.in_arcs(v)) {
      if (!allowed[id]) continue;
      const int w = forward ? g.arc(id).head : g.arc(id).tail;
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<char> ForwardReach(const Digraph& g, int start,
                               const std::vector<char>& allowed) {
  return Sweep(g, start, allowed, true);
}

std::vector<char> BackwardReach(const Digraph& g, int target,
                                const std::vector<char>& allowed) {
  return Sweep(g, target, allowed, false);
}

ElementSet ReachableFrom(const Digraph& g, int start,
                         const ElementSet& allowed) {
  if (start < 0 || start >= g.node_count()) {
    throw Error(ErrorCode::kInvalidParams, "start node out of range");
  }
  const auto seen =
      ForwardReach(g, start, ToMask(NormalizeSet(allowed, g.arc_count()),
                                    g.arc_count()));
  ElementSet nodes;
  for (int v = 0; v < g.node_count(); ++v) {
    if (seen[v]) nodes.push_back(v);
  }
  return nodes;
}

std::optional<std::vector<int>> FindPath(const Digraph& g, int from, int to,
                                         const std::vector<char>& allowed) {
  std::vector<int> via(g.node_count(), -1);
  std::vector<char> seen(g.node_count(), 0);
  std::deque<int> queue = {from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    const int v = queue.front();
    queue.pop_front();
    for (int id : g.out_arcs(v)) {
      const int w = g.arc(id).head;
      if (!allowed[id] || seen[w]) continue;
      seen[w] = 1;
      via[w] = id;
      queue.push_back(w);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<int> path;
  for (int v = to; v != from; v = g.arc(via[v]).tail) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

ElementSet SpanningForestMaxWeight(const Digraph& g, const ElementSet& restrict,
                                   const WeightedGroundSet& weights) {
  if (weights.size() != g.arc_count()) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  ElementSet order = NormalizeSet(restrict, g.arc_count());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a] > weights[b];
  });
  UnionFind uf(g.node_count());
  ElementSet forest;
  for (int id : order) {
    if (uf.Unite(g.arc(id).tail, g.arc(id).head)) forest.push_back(id);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

std::optional<std::vector<OrientedArc>> FindUndirectedCycle(
    const Digraph& g, const ElementSet& arcs) {
  // Grow a forest; the first arc joining two already-connected nodes closes
  // a cycle with the forest path between its endpoints.
  const int n = g.node_count();
  UnionFind uf(n);
  std::vector<std::vector<int>> adjacency(n);
  for (int id : arcs) {
    const Arc& a = g.arc(id);
    if (!uf.Unite(a.tail, a.head)) {
      if (a.tail == a.head) return std::vector<OrientedArc>{{id, true}};
      // BFS in the forest from head back to tail.
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::deque<int> queue = {a.head};
      seen[a.head] = 1;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int fid : adjacency[v]) {
          const Arc& f = g.arc(fid);
          const int w = f.tail == v ? f.head : f.tail;
          if (seen[w]) continue;
          seen[w] = 1;
          via[w] = fid;
          queue.push_back(w);
        }
      }
      // Traverse: tail -> head along `id`, then head -> ... -> tail in the
      // forest.
      std::vector<OrientedArc> cycle = {{id, true}};
      std::vector<int> back;
      for (int v = a.tail; v != a.head;) {
        const int fid = via[v];
        back.push_back(fid);
        v = g.arc(fid).tail == v ? g.arc(fid).head : g.arc(fid).tail;
      }
      // `back` walks tail -> head; the cycle needs head -> tail.
      int at = a.head;
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        const Arc& f = g.arc(*it);
        const bool forward = f.tail == at;
        cycle.push_back({*it, forward});
        at = forward ? f.head : f.tail;
      }
      return cycle;
    }
    adjacency[a.tail].push_back(id);
    adjacency[a.head].push_back(id);
  }
  return std::nullopt;
}

std::vector<ElementSet> EnumerateStPaths(const Digraph& g, StPair st,
                                         std::int64_t cap) {
  ValidateStPair(g, st);
  if (cap < 1) throw Error(ErrorCode::kInvalidParams, "path cap must be >= 1");
  const auto useful = BackwardReach(g, st.sink, AllArcs(g));
  std::vector<ElementSet> paths;
  if (!useful[st.source]) return paths;
  std::vector<char> on_path(g.node_count(), 0);
  std::vector<int> arcs;
  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> stack = {{st.source, 0}};
  on_path[st.source] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& out = g.out_arcs(f.node);
    if (f.edge == out.size()) {
      on_path[f.node] = 0;
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
      continue;
    }
    const int id = out[f.edge++];
    const int w = g.arc(id).head;
    if (on_path[w] || !useful[w]) continue;
    if (w == st.sink) {
      if (static_cast<std::int64_t>(paths.size()) >= cap) {
        throw Error(ErrorCode::kPathExplosion,
                    "more than " + std::to_string(cap) + " s-t paths");
      }
      ElementSet p = arcs;
      p.push_back(id);
      std::sort(p.begin(), p.end());
      paths.push_back(std::move(p));
      continue;
    }
    on_path[w] = 1;
    arcs.push_back(id);
    stack.push_back({w, 0});
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace ctlsets
