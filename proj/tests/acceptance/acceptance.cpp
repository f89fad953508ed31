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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ctlsets/explicit_list.hpp"
#include "ctlsets/flow.hpp"
#include "ctlsets/graph.hpp"
#include "ctlsets/instances.hpp"
#include "ctlsets/linear.hpp"
#include "ctlsets/matroid.hpp"
#include "ctlsets/path.hpp"
#include "ctlsets/polymatroid.hpp"
#include "ctlsets/tolls.hpp"
#include "oracles.hpp"
#include "projected_gradient.hpp"

namespace ctlsets {
namespace {

using oracle::Mask;
using oracle::SimpleArc;

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::string first_failure;

  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
    pass = false;
  }
};

std::vector<SimpleArc> ToSimple(const Digraph& g) {
  std::vector<SimpleArc> out;
  for (const auto& a : g.arcs()) out.push_back({a.tail, a.head});
  return out;
}

Mask ToBits(const ElementSet& s) {
  Mask m = 0;
  for (int x : s) m |= Mask{1} << x;
  return m;
}

std::string Str(const Rational& q) { return ToString(q); }

// Graphs for the flow criteria: every digraph on four nodes with s = 0,
// t = 3 and at most nine arcs, plus seeded random multigraphs on five and
// six nodes with at most nine arcs. Only graphs with an s-t path are kept.
struct FlowFixture {
  Digraph graph;
  StPair st;
};

std::vector<FlowFixture> FlowFamily() {
  std::vector<FlowFixture> out;
  std::vector<Arc> pairs;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  for (Mask m = 0; m < (Mask{1} << pairs.size()); ++m) {
    if (std::popcount(m) > 9) continue;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((m >> i) & 1) arcs.push_back(pairs[i]);
    }
    Digraph g(4, arcs);
    if (!ForwardReach(g, 0, AllArcs(g))[3]) continue;
    out.push_back({std::move(g), {0, 3}});
  }
  std::mt19937_64 rng(0xf10);
  int added = 0;
  while (added < 400) {
    const int n = 5 + static_cast<int>(rng() % 2);
    const int m = 3 + static_cast<int>(rng() % 7);
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % (n - 1));
      if (v >= u) ++v;
      arcs.push_back({u, v});
    }
    Digraph g(n, arcs);
    if (!ForwardReach(g, 0, AllArcs(g))[n - 1]) continue;
    out.push_back({std::move(g), {0, n - 1}});
    ++added;
  }
  return out;
}

// Arcs on an s-t path or a directed cycle have full column rank on E'\S
// exactly when no nonzero circulation lives there.
bool NoCirculationOutside(int nodes, const std::vector<SimpleArc>& arcs,
                          const std::vector<char>& relevant, Mask s) {
  std::vector<oracle::QVector> columns;
  for (std::size_t id = 0; id < arcs.size(); ++id) {
    if (!relevant[id] || ((s >> id) & 1)) continue;
    oracle::QVector col(nodes, 0);
    col[arcs[id].tail] -= 1;
    col[arcs[id].head] += 1;
    columns.push_back(col);
  }
  return oracle::Rank(columns) == static_cast<int>(columns.size());
}

Outcome Criterion1() {
  Outcome o;
  std::ostringstream d;
  for (int k = 1; k <= 4; ++k) {
    const auto inst = GenTightGapFamily(k);
    const auto& g = inst.graph;
    const auto paths = oracle::StPathMasks(g.node_count(), ToSimple(g), inst.st.source,
                                           inst.st.sink);
    const int path_opt = oracle::MinPathIdentifyingSize(paths, g.arc_count());
    const auto exact = ExactMinPathIdentifying(g, inst.st, WeightedGroundSet::Unit(g.arc_count()));
    const auto flow = MinWeightFlowIdentifying(g, inst.st, WeightedGroundSet::Unit(g.arc_count()));
    const int flow_oracle =
        g.arc_count() - oracle::Rank([&] {
          std::vector<oracle::QVector> cols;
          for (const auto& a : g.arcs()) {
            oracle::QVector c(g.node_count(), 0);
            c[a.tail] -= 1;
            c[a.head] += 1;
            cols.push_back(c);
          }
          return cols;
        }());
    const int flow_size = static_cast<int>(flow.identifying_set.size());
    o.Expect(path_opt == k, "k=" + std::to_string(k) + " oracle path optimum");
    o.Expect(static_cast<int>(exact.identifying_set.size()) == k,
             "k=" + std::to_string(k) + " library path optimum");
    o.Expect(flow_size == k * (k + 1) / 2 && flow_oracle == flow_size,
             "k=" + std::to_string(k) + " flow optimum");
    d << "k=" << k << ": path " << exact.identifying_set.size() << ", flow " << flow_size << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome Criterion2(const std::vector<FlowFixture>& family) {
  Outcome o;
  long subsets = 0, witnesses = 0;
  for (const auto& fx : family) {
    const auto& g = fx.graph;
    const auto simple = ToSimple(g);
    const auto relevant = oracle::RelevantArcs(g.node_count(), simple, fx.st.source, fx.st.sink);
    std::vector<int> relevant_ids;
    for (int id = 0; id < g.arc_count(); ++id) {
      if (relevant[id]) relevant_ids.push_back(id);
    }
    o.Expect(RelevantArcs(g, fx.st) == ElementSet(relevant_ids), "relevant arcs");
    for (Mask s = 0; s < (Mask{1} << g.arc_count()); ++s) {
      ++subsets;
      std::vector<int> rest;
      for (int id : relevant_ids) {
        if (!((s >> id) & 1)) rest.push_back(id);
      }
      const bool want = !oracle::HasUndirectedCycle(g.node_count(), simple, rest);
      const bool want_rank = NoCirculationOutside(g.node_count(), simple, relevant, s);
      const auto v = VerifyFlowIdentifying(g, fx.st, FromMask(s));
      o.Expect(want == want_rank, "oracles disagree");
      o.Expect(v.identifying == want, "verdict mismatch");
      if (!v.identifying) {
        ++witnesses;
        bool agree = true;
        for (int id = 0; id < g.arc_count(); ++id) {
          if ((s >> id) & 1) agree = agree && v.flow_a[id] == v.flow_b[id];
        }
        o.Expect(oracle::IsUnitFlow(g.node_count(), simple, fx.st.source, fx.st.sink, v.flow_a) &&
                     oracle::IsUnitFlow(g.node_count(), simple, fx.st.source, fx.st.sink,
                                        v.flow_b) &&
                     v.flow_a != v.flow_b && agree,
                 "witness flows invalid");
      }
    }
  }
  o.detail = std::to_string(family.size()) + " graphs, " + std::to_string(subsets) +
             " subsets, " + std::to_string(witnesses) + " witness pairs checked";
  return o;
}

struct DagFixture {
  GeneratedInstance inst;
  std::vector<Mask> paths;
};

std::vector<DagFixture> DagFamily() {
  std::vector<DagFixture> out;
  for (std::uint64_t seed = 0; out.size() < 600; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const double p = 0.3 + 0.1 * static_cast<double>(seed % 5);
    auto inst = GenRandomDag(n, p, seed);
    if (inst.graph.arc_count() > 12 || inst.graph.arc_count() == 0) continue;
    auto paths = oracle::StPathMasks(n, ToSimple(inst.graph), inst.st.source, inst.st.sink);
    if (paths.empty()) continue;
    out.push_back({std::move(inst), std::move(paths)});
  }
  return out;
}

Outcome Criterion3(const std::vector<DagFixture>& family) {
  Outcome o;
  std::mt19937_64 rng(0xda9);
  long checked = 0;
  for (const auto& fx : family) {
    const auto& g = fx.inst.graph;
    const int m = g.arc_count();
    std::vector<Mask> subsets;
    if (m <= 10) {
      for (Mask s = 0; s < (Mask{1} << m); ++s) subsets.push_back(s);
    } else {
      for (int i = 0; i < 512; ++i) subsets.push_back(rng() & ((Mask{1} << m) - 1));
    }
    for (Mask s : subsets) {
      ++checked;
      const auto v = VerifyPathIdentifyingDag(g, fx.inst.st, FromMask(s));
      o.Expect(v.identifying == oracle::PathsIdentified(fx.paths, s), "verdict mismatch");
      if (!v.identifying) {
        const Mask a = ToBits(v.path_a), b = ToBits(v.path_b);
        o.Expect(a != b && (a & s) == (b & s) &&
                     std::count(fx.paths.begin(), fx.paths.end(), a) == 1 &&
                     std::count(fx.paths.begin(), fx.paths.end(), b) == 1,
                 "witness paths invalid");
      }
    }
  }
  o.detail = std::to_string(family.size()) + " DAGs, " + std::to_string(checked) + " subsets";
  return o;
}

Outcome Criterion4(const std::vector<DagFixture>& family) {
  Outcome o;
  int tight = 0;
  for (const auto& fx : family) {
    const auto& g = fx.inst.graph;
    const int m = g.arc_count();
    const auto approx =
        ApproxMinPathIdentifyingDag(g, fx.inst.st, WeightedGroundSet::Unit(m));
    o.Expect(oracle::PathsIdentified(fx.paths, ToBits(approx.identifying_set)),
             "approximation not identifying");
    const int opt = oracle::MinPathIdentifyingSize(fx.paths, m);
    const auto gap = ComputeGapRatio(g, fx.inst.st);
    o.Expect(gap.optimum_size == opt, "library optimum differs from oracle");
    const int a = static_cast<int>(approx.identifying_set.size());
    o.Expect(2 * a <= (opt + 1) * opt, "gap bound violated");
    const double root = std::sqrt(static_cast<double>(m));
    if (opt < root) {
      o.Expect((opt + 1) * opt / 2.0 <= root * opt + 1e-12 && a <= root * opt + 1e-12,
               "sqrt bound violated");
    }
    if (2 * a == (opt + 1) * opt && opt > 1) ++tight;
  }
  for (int k = 1; k <= 4; ++k) {
    const auto inst = GenTightGapFamily(k);
    const auto gap = ComputeGapRatio(inst.graph, inst.st);
    o.Expect(2 * gap.approx_size == (gap.optimum_size + 1) * gap.optimum_size,
             "tight family not tight");
  }
  o.detail = std::to_string(family.size()) + " DAGs + tight family k=1..4; " +
             std::to_string(tight) + " random DAGs meet the bound with equality";
  return o;
}

// Matroid fixtures with |E| <= 8.
std::vector<MatroidOracle> MatroidFamily() {
  std::vector<MatroidOracle> out;
  std::vector<Arc> pairs;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) pairs.push_back({u, v});
  }
  for (Mask m = 0; m < 64; ++m) {
    std::vector<Arc> arcs;
    for (int i = 0; i < 6; ++i) {
      if ((m >> i) & 1) arcs.push_back(pairs[i]);
    }
    out.push_back(GraphicMatroid(Digraph(4, arcs)));
  }
  // Multigraphs with parallel arcs and loops.
  out.push_back(GraphicMatroid(Digraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}})));
  out.push_back(GraphicMatroid(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 1}, {1, 3}})));
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) out.push_back(UniformMatroid(k, n));
    out.push_back(FreeMatroid(n));
  }
  out.push_back(PartitionMatroid({{0, 1, 2}, {3, 4}, {5}}, {2, 1, 1}));
  out.push_back(PartitionMatroid({{0, 3, 6}, {1, 4, 7}, {2, 5}}, {1, 2, 0}));
  out.push_back(PartitionMatroid({{0, 1, 2, 3}, {4, 5, 6, 7}}, {2, 3}));
  out.push_back(PartitionMatroid({{0}, {1, 2}, {3, 4, 5, 6, 7}}, {1, 1, 4}));
  return out;
}

// Tolled cost of a basis under integer costs and tolls.
std::int64_t Tolled(Mask basis, const std::vector<std::int64_t>& c,
                    const std::vector<std::int64_t>& gamma) {
  std::int64_t sum = 0;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if ((basis >> e) & 1) sum += c[e] + gamma[e];
  }
  return sum;
}

// Controlling for non-decreasing linear costs: either every basis is made
// optimal by the +-M tolls for every test cost, or two bases agree on S and
// the cost chi_B leaves B strictly worse than B' whatever the tolls.
enum class Control { kControlling, kNotControlling, kUndecided };

Control ControlOracle(int n, const std::vector<Mask>& bases, Mask s,
                      const std::vector<std::vector<std::int64_t>>& costs) {
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (i == j || (bases[i] & s) != (bases[j] & s)) continue;
      std::vector<std::int64_t> chi(n, 0);
      for (int e = 0; e < n; ++e) chi[e] = (bases[i] >> e) & 1;
      const std::vector<std::int64_t> zero(n, 0);
      if (Tolled(bases[i], chi, zero) > Tolled(bases[j], chi, zero)) {
        return Control::kNotControlling;
      }
    }
  }
  for (const auto& c : costs) {
    std::int64_t big = 1;
    for (Mask b : bases) big = std::max(big, 2 * std::abs(Tolled(b, c, std::vector<std::int64_t>(n, 0))));
    for (Mask target : bases) {
      std::vector<std::int64_t> gamma(n, 0);
      for (int e = 0; e < n; ++e) {
        if ((s >> e) & 1) gamma[e] = ((target >> e) & 1) ? -big : big;
      }
      const std::int64_t at = Tolled(target, c, gamma);
      for (Mask b : bases) {
        if (Tolled(b, c, gamma) < at) return Control::kUndecided;
      }
    }
  }
  return Control::kControlling;
}

Outcome Criterion5() {
  Outcome o;
  const auto family = MatroidFamily();
  std::mt19937_64 rng(0x3a7);
  long subsets = 0;
  for (const auto& m : family) {
    const int n = m.ground_size();
    const auto indep = [&m](Mask x) { return m.IsIndependent(FromMask(x)); };
    const auto bases = oracle::Bases(n, indep);
    const auto circuits = oracle::Circuits(n, indep);
    const auto components = ComputeMatroidComponents(m).partition;
    std::vector<std::vector<std::int64_t>> costs;
    for (int i = 0; i < 2; ++i) {
      std::vector<std::int64_t> c(n);
      for (auto& v : c) v = static_cast<std::int64_t>(rng() % 7);
      costs.push_back(c);
    }
    std::vector<char> identifying(std::size_t{1} << n);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      ++subsets;
      bool separates = true;
      for (std::size_t i = 0; i < bases.size() && separates; ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
          if ((bases[i] & s) == (bases[j] & s)) {
            separates = false;
            break;
          }
        }
      }
      bool circuit_condition = true;
      for (Mask c : circuits) {
        if (std::popcount(c & ~s) >= 2) circuit_condition = false;
      }
      bool component_condition = true;
      for (const auto& c : components) {
        if (c.size() >= 2 && std::popcount(ToBits(c) & ~s) >= 2) component_condition = false;
      }
      const Control control = ControlOracle(n, bases, s, costs);
      o.Expect(control != Control::kUndecided, m.name() + ": control oracle undecided");
      const bool controlling = control == Control::kControlling;
      o.Expect(separates == circuit_condition && separates == component_condition &&
                   separates == controlling,
               m.name() + ": conditions disagree at S=" + std::to_string(s));
      o.Expect(VerifyMatroidIdentifying(m, FromMask(s)).identifying == separates,
               m.name() + ": verifier disagrees");
      identifying[s] = separates;
    }
    for (int round = 0; round < 20; ++round) {
      std::vector<Rational> weights;
      for (int e = 0; e < n; ++e) {
        Rational w(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4));
        w.canonicalize();
        weights.push_back(w);
      }
      const WeightedGroundSet w(weights);
      Rational best = -1;
      for (Mask s = 0; s < identifying.size(); ++s) {
        if (!identifying[s]) continue;
        const Rational ws = w.WeightOf(FromMask(s));
        if (best < 0 || ws < best) best = ws;
      }
      const auto r = MinWeightMatroidIdentifying(m, w);
      o.Expect(r.total_weight == best, m.name() + ": greedy weight not optimal");
      o.Expect(identifying[ToBits(r.identifying_set)], m.name() + ": greedy set not identifying");
    }
  }
  o.detail = std::to_string(family.size()) + " matroids, " + std::to_string(subsets) +
             " subsets, 20 weightings each";
  return o;
}

std::vector<Rational> RandomPolymatroidTable(int n, std::mt19937_64& rng) {
  std::vector<Rational> table(std::size_t{1} << n, Rational(0));
  const int pieces = 1 + static_cast<int>(rng() % 3);
  for (int p = 0; p < pieces; ++p) {
    Mask support = rng() & ((Mask{1} << n) - 1);
    if (support == 0) support = 1;
    const int kind = static_cast<int>(rng() % 3);
    std::vector<long> a(n);
    for (auto& v : a) v = 1 + static_cast<long>(rng() % 3);
    const long budget = 1 + static_cast<long>(rng() % 5);
    std::vector<Mask> covers(n);
    for (auto& c : covers) c = rng() & 15;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (Mask m = 0; m < table.size(); ++m) {
      const Mask t = m & support;
      if (kind == 0) {
        long sum = 0;
        for (int e = 0; e < n; ++e) {
          if ((t >> e) & 1) sum += a[e];
        }
        table[m] += Rational(std::min(sum, budget), 2);
      } else if (kind == 1) {
        Mask covered = 0;
        for (int e = 0; e < n; ++e) {
          if ((t >> e) & 1) covered |= covers[e];
        }
        table[m] += std::popcount(covered);
      } else {
        table[m] += std::min(std::popcount(t), k);
      }
    }
  }
  for (auto& v : table) v.canonicalize();
  return table;
}

// e ~ f iff every separator contains both or neither.
std::vector<ElementSet> SeparatorAtoms(int n, const std::vector<Rational>& table) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> separators;
  for (Mask t = 1; t < full; ++t) {
    if (table[t] + table[full & ~t] == table[full]) separators.push_back(t);
  }
  std::vector<ElementSet> atoms;
  std::vector<char> placed(n, 0);
  for (int e = 0; e < n; ++e) {
    if (placed[e]) continue;
    ElementSet atom;
    for (int f = e; f < n; ++f) {
      bool same = true;
      for (Mask t : separators) {
        if (((t >> e) & 1) != ((t >> f) & 1)) same = false;
      }
      if (same) {
        atom.push_back(f);
        placed[f] = 1;
      }
    }
    atoms.push_back(atom);
  }
  return atoms;
}

Outcome Criterion6() {
  Outcome o;
  std::mt19937_64 rng(0x9017);
  std::vector<std::pair<int, std::vector<Rational>>> tables;
  for (int i = 0; i < 80; ++i) {
    const int n = 2 + i % 5;
    tables.emplace_back(n, RandomPolymatroidTable(n, rng));
  }
  // Named fixtures: truncations, a free function and a separable sum.
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<Rational> t(std::size_t{1} << n);
      for (Mask m = 0; m < t.size(); ++m) t[m] = std::min(std::popcount(m), k);
      tables.emplace_back(n, t);
    }
  }
  long subsets = 0, witnesses = 0;
  for (const auto& [n, table] : tables) {
    const auto f = TablePolymatroid(n, table);
    const auto comps = ComputePolymatroidComponents(f);
    o.Expect(comps.partition == SeparatorAtoms(n, table), "components differ from separator atoms");
    o.Expect(comps.partition ==
                 ComputePolymatroidComponents(f, SplitOrder::kLargestFirst).partition,
             "split order changes partition");
    const auto vertices = oracle::GreedyVertices(n, table);
    for (Mask s = 0; s < table.size(); ++s) {
      ++subsets;
      bool condition = true;
      for (const auto& c : comps.partition) {
        if (std::popcount(ToBits(c) & ~s) >= 2) condition = false;
      }
      const bool identifying = !oracle::AffineDirectionVanishingOn(vertices, s);
      o.Expect(condition == identifying, "condition (iii) differs from identifying");
      const auto v = VerifyPolymatroidIdentifying(f, FromMask(s));
      o.Expect(v.identifying == identifying, "verifier disagrees");
      if (!v.identifying) {
        ++witnesses;
        bool agree = true;
        for (int e = 0; e < n; ++e) {
          if ((s >> e) & 1) agree = agree && v.base_a[e] == v.base_b[e];
        }
        o.Expect(oracle::InBasePolytope(n, table, v.base_a) &&
                     oracle::InBasePolytope(n, table, v.base_b) && v.base_a != v.base_b && agree,
                 "witness pair invalid");
      }
    }
  }
  int rank_fixtures = 0;
  for (const auto& m : MatroidFamily()) {
    if (m.ground_size() > 6) continue;
    ++rank_fixtures;
    o.Expect(ComputePolymatroidComponents(MatroidRankPolymatroid(m)).partition ==
                 ComputeMatroidComponents(m).partition,
             m.name() + ": rank components differ");
  }
  o.detail = std::to_string(tables.size()) + " tables, " + std::to_string(subsets) +
             " subsets, " + std::to_string(witnesses) + " witness pairs, " +
             std::to_string(rank_fixtures) + " rank fixtures";
  return o;
}

Outcome Criterion7(const std::vector<FlowFixture>& family) {
  Outcome o;
  std::mt19937_64 rng(0x7);
  for (const auto& fx : family) {
    const auto& g = fx.graph;
    const auto simple = ToSimple(g);
    const auto points = FlowPolytopeAffineBasis(g, fx.st);
    const int dim = oracle::FlowPolytopeDimension(g.node_count(), simple, fx.st.source, fx.st.sink);
    bool flows = true;
    for (const auto& p : points) {
      flows = flows && oracle::IsUnitFlow(g.node_count(), simple, fx.st.source, fx.st.sink, p);
    }
    o.Expect(flows && static_cast<int>(points.size()) == dim + 1, "basis points invalid");
    const AffineBasis basis(points);
    std::vector<Rational> weights;
    for (int e = 0; e < g.arc_count(); ++e) {
      Rational w(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 3));
      w.canonicalize();
      weights.push_back(w);
    }
    const WeightedGroundSet w(weights);
    const auto lin = MinWeightIdentifyingFromBasis(basis, w);
    const auto flow = MinWeightFlowIdentifying(g, fx.st, w);
    o.Expect(lin.total_weight == flow.total_weight, "weights differ");
    o.Expect(static_cast<int>(lin.identifying_set.size()) == dim, "|S| != dim aff(X)");
  }
  o.detail = std::to_string(family.size()) + " flow polytopes";
  return o;
}

Outcome Criterion8() {
  Outcome o;
  std::mt19937_64 rng(0x8);
  double worst = 1, total = 0;
  int counted = 0;
  const int instances = 1200;
  for (int round = 0; round < instances; ++round) {
    const int dim = 1 + static_cast<int>(rng() % 12);
    const int count = 1 + static_cast<int>(rng() % 12);
    std::vector<StateVector> vectors;
    for (int i = 0; i < count; ++i) {
      StateVector v(dim);
      for (auto& b : v) b = static_cast<int>(rng() % 3 == 0);
      vectors.push_back(v);
    }
    const SolutionList x(dim, vectors);
    std::vector<Rational> weights;
    for (int e = 0; e < dim; ++e) weights.emplace_back(static_cast<long>(1 + rng() % 9));
    const WeightedGroundSet w(weights);
    // Brute-force optimum: projections onto S pairwise distinct.
    Rational best = -1;
    for (Mask s = 0; s < (Mask{1} << dim); ++s) {
      std::set<Mask> seen;
      for (const auto& v : x.vectors()) {
        Mask proj = 0;
        for (int e = 0; e < dim; ++e) {
          if (((s >> e) & 1) && v[e]) proj |= Mask{1} << e;
        }
        seen.insert(proj);
      }
      if (static_cast<int>(seen.size()) != x.size()) continue;
      const Rational ws = w.WeightOf(FromMask(s));
      if (best < 0 || ws < best) best = ws;
    }
    const auto greedy = GreedyIdentifying(x, w);
    o.Expect(VerifyExplicitIdentifying(x, greedy.identifying_set).identifying,
             "greedy set not identifying");
    o.Expect(ExactIdentifying(x, w).total_weight == best, "exact solver not optimal");
    const double bound = 2 * std::log(std::max(x.size(), 2));
    o.Expect(greedy.total_weight.get_d() <= bound * best.get_d() + 1e-12, "log bound violated");
    if (best > 0) {
      const double ratio = Rational(greedy.total_weight / best).get_d();
      worst = std::max(worst, ratio);
      total += ratio;
      ++counted;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d instances; greedy/optimum mean %.4f, max %.4f", instances,
                total / std::max(counted, 1), worst);
  o.detail = buf;
  return o;
}

Outcome Criterion9() {
  Outcome o;
  std::mt19937_64 rng(0x9);
  int discrete = 0;
  // Random binary lists.
  for (int round = 0; round < 300; ++round) {
    const int dim = 1 + static_cast<int>(rng() % 6);
    const int count = 1 + static_cast<int>(rng() % 10);
    std::vector<StateVector> vectors;
    for (int i = 0; i < count; ++i) {
      StateVector v(dim);
      for (auto& b : v) b = static_cast<int>(rng() & 1);
      vectors.push_back(v);
    }
    const SolutionList x(dim, vectors);
    RationalVector c(dim);
    for (auto& v : c) {
      v = Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3));
      v.canonicalize();
    }
    const auto cost = LinearCost(c);
    const ElementSet s = GreedyIdentifying(x, WeightedGroundSet::Unit(dim)).identifying_set;
    for (int t = 0; t < x.size(); ++t) {
      ++discrete;
      const auto tolls = DiscreteTolls(x, s, cost, x[t]);
      const Rational at = TolledCost(cost, tolls, ToRational(x[t]));
      for (const auto& y : x.vectors()) {
        o.Expect(at <= TolledCost(cost, tolls, ToRational(y)), "discrete target not optimal");
      }
      for (int e = 0; e < dim; ++e) {
        if (!Contains(s, e)) o.Expect(tolls.gamma[e] == 0, "toll outside S");
      }
    }
  }
  // Path sets of the tight gap family with path-length and random costs.
  for (int k = 1; k <= 3; ++k) {
    const auto inst = GenTightGapFamily(k);
    const int m = inst.graph.arc_count();
    std::vector<StateVector> states;
    for (const auto& p : EnumerateStPaths(inst.graph, inst.st, 1000)) {
      StateVector v(m, 0);
      for (int a : p) v[a] = 1;
      states.push_back(v);
    }
    const SolutionList x(m, states);
    RationalVector c(m);
    for (auto& v : c) v = static_cast<long>(rng() % 5);
    const auto cost = LinearCost(c);
    for (const auto& target : x.vectors()) {
      ++discrete;
      const auto tolls = DiscreteTolls(x, inst.meta.arc_sets.at("marked"), cost, target);
      const Rational at = TolledCost(cost, tolls, ToRational(target));
      for (const auto& y : x.vectors()) {
        o.Expect(at <= TolledCost(cost, tolls, ToRational(y)), "path target not optimal");
      }
    }
  }

  const AffineBasis parallel({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  const auto half_squares = QuadraticCost({Rational(1), Rational(1)}, {Rational(0), Rational(0)});
  const auto gamma = ConvexTolls(parallel, {0}, half_squares, {Rational(3, 4), Rational(1, 4)});
  o.Expect(gamma.gamma[0] == Rational(-1, 2) && gamma.gamma[1] == 0, "parallel-arc toll != -1/2");

  struct Fixture {
    std::string name;
    int nodes;
    std::vector<Arc> arcs;
  };
  const std::vector<Fixture> fixtures = {
      {"parallel", 2, {{0, 1}, {0, 1}}},
      {"series-parallel", 3, {{0, 1}, {1, 2}, {1, 2}}},
      {"diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}},
      {"wheatstone", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}}},
  };
  double worst = 0;
  int runs = 0;
  for (const auto& fx : fixtures) {
    const Digraph g(fx.nodes, fx.arcs);
    const StPair st{0, fx.nodes - 1};
    const int m = g.arc_count();
    const auto points = FlowPolytopeAffineBasis(g, st);
    const AffineBasis basis(points);
    const auto s = MinWeightFlowIdentifying(g, st, WeightedGroundSet::Unit(m)).identifying_set;
    for (int trial = 0; trial < 4; ++trial) {
      RationalVector r(m), a(m);
      for (int e = 0; e < m; ++e) {
        r[e] = 1 + static_cast<long>(rng() % 4);
        a[e] = static_cast<long>(rng() % 3);
      }
      // Strictly positive target: a positive mixture that includes the
      // first basis point, which is positive on every arc.
      std::vector<Rational> mix(points.size());
      Rational sum = 0;
      for (auto& v : mix) {
        v = 1 + static_cast<long>(rng() % 5);
        sum += v;
      }
      RationalVector target(m, Rational(0));
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (int e = 0; e < m; ++e) target[e] += mix[i] / sum * points[i][e];
      }
      const auto cost = QuadraticCost(r, a);
      const auto tolls = ConvexTolls(basis, s, cost, target);
      Eigen::VectorXd rd(m), lin(m);
      for (int e = 0; e < m; ++e) {
        rd[e] = r[e].get_d();
        lin[e] = Rational(a[e] + tolls.gamma[e]).get_d();
      }
      const auto x = oracle::MinimizeQuadraticOverFlows(fx.nodes, ToSimple(g), st.source, st.sink,
                                                        rd, lin);
      Eigen::VectorXd td(m);
      for (int e = 0; e < m; ++e) td[e] = target[e].get_d();
      const double err = (x - td).norm();
      worst = std::max(worst, err);
      ++runs;
      o.Expect(err <= 1e-6, fx.name + ": projected gradient missed the target");
      const Rational at = TolledCost(cost, tolls, target);
      for (const auto& p : points) {
        o.Expect(TolledCost(cost, tolls, p) >= at, fx.name + ": basis point beats target");
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d discrete targets; parallel-arc toll %s; %d descent runs, max error %.2e",
                discrete, Str(gamma.gamma[0]).c_str(), runs, worst);
  o.detail = buf;
  return o;
}

Outcome Criterion10() {
  Outcome o;
  const SolutionList x(3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 3}});
  const RationalVector c = {Rational(1), Rational(-1), Rational(1)};
  const auto v = ControllingCounterexampleCheck(x, {2}, {LinearCost(c)});
  o.Expect(v.identifying, "not identifying");
  o.Expect(!v.controlling, "reported controlling");
  if (v.controlling) return o;
  // Rebuild the system independently and check the Farkas certificate.
  const auto& target = x[v.target_index];
  const auto cost = [&](const StateVector& y) {
    Rational sum = 0;
    for (int e = 0; e < 3; ++e) sum += c[e] * y[e];
    return sum;
  };
  std::vector<std::pair<Rational, Rational>> rows;  // coefficient on gamma, bound
  for (int i = 0; i < x.size(); ++i) {
    if (i == v.target_index) continue;
    rows.emplace_back(Rational(target[2] - x[i][2]), cost(x[i]) - cost(target));
  }
  o.Expect(rows.size() == v.system.size(), "system size");
  for (std::size_t i = 0; i < rows.size() && i < v.system.size(); ++i) {
    o.Expect(v.system[i].coefficients[0] == rows[i].first && v.system[i].bound == rows[i].second,
             "system row mismatch");
  }
  Rational coef = 0, bound = 0;
  bool nonnegative = v.farkas.size() == rows.size();
  for (std::size_t i = 0; i < v.farkas.size() && i < rows.size(); ++i) {
    nonnegative = nonnegative && v.farkas[i] >= 0;
    coef += v.farkas[i] * rows[i].first;
    bound += v.farkas[i] * rows[i].second;
  }
  o.Expect(nonnegative && coef == 0 && bound < 0, "Farkas certificate invalid");
  std::ostringstream d;
  d << "identifying, not controlling; target (" << target[0] << "," << target[1] << ","
    << target[2] << "), rows:";
  for (const auto& [a, b] : rows) d << " " << Str(a) << "g<=" << Str(b);
  d << "; multipliers:";
  for (const auto& l : v.farkas) d << " " << Str(l);
  o.detail = d.str();
  return o;
}

Outcome Criterion11() {
  Outcome o;
  const auto graphs = oracle::GraphsUpToIsomorphism(5);
  int cases = 0, size_mismatch = 0, cover_mismatch = 0, stuck = 0;
  std::string example;
  for (const auto& [vertices, edges] : graphs) {
    const UndirectedGraph base{vertices, edges};
    const int tau = oracle::VertexCoverNumber(vertices, edges);
    for (int copies = 1; copies <= 2; ++copies) {
      ++cases;
      const auto inst = GenVertexCoverDag(base, copies);
      const int m = inst.graph.arc_count();
      const auto exact = ExactMinPathIdentifying(inst.graph, inst.st, WeightedGroundSet::Unit(m));
      const int opt = static_cast<int>(exact.identifying_set.size());
      const int formula = static_cast<int>(edges.size()) + copies * tau;
      if (opt != formula) {
        ++size_mismatch;
        if (example.empty()) {
          example = std::to_string(vertices) + " vertices, " + std::to_string(edges.size()) +
                    " edges, l=" + std::to_string(copies) + ": optimum " + std::to_string(opt) +
                    " vs " + std::to_string(formula);
        }
      }
      o.Expect(opt == formula, "min identifying != |E_s| + l*tau");
      try {
        const auto r = ExtractVertexCover(base, copies, exact.identifying_set);
        bool sizes = r.all_cover;
        for (const auto& u : r.covers) sizes = sizes && static_cast<int>(u.size()) == tau;
        if (!sizes) ++cover_mismatch;
        o.Expect(sizes, "extracted covers not minimum vertex covers");
      } catch (const Error& e) {
        ++stuck;
        o.Expect(false, std::string("extraction failed: ") + e.what());
      }
    }
  }
  o.detail = std::to_string(cases) + " cases (" + std::to_string(graphs.size()) +
             " graphs x l in {1,2}); optimum differs from formula in " +
             std::to_string(size_mismatch) + ", covers not minimum in " +
             std::to_string(cover_mismatch) + ", extraction failed in " + std::to_string(stuck) +
             (example.empty() ? "" : "; e.g. " + example);
  return o;
}

}  // namespace
}  // namespace ctlsets

int main() {
  using namespace ctlsets;
  using Clock = std::chrono::steady_clock;
  const auto flow_family = FlowFamily();
  const auto dag_family = DagFamily();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tight gap family: path optimum k, flow optimum k(k+1)/2", Criterion1},
      {"flow verifier matches the cycle oracle with valid witness flows",
       [&] { return Criterion2(flow_family); }},
      {"DAG path verifier matches pairwise path comparison", [&] { return Criterion3(dag_family); }},
      {"flow-based path approximation is valid and within the gap bound",
       [&] { return Criterion4(dag_family); }},
      {"matroid conditions coincide and the component greedy is optimal", Criterion5},
      {"polymatroid condition (iii) matches identifying, with witnesses", Criterion6},
      {"affine-basis greedy matches flow weights and |S| = dim aff(X)",
       [&] { return Criterion7(flow_family); }},
      {"greedy set cover within 2 ln(max(|X|,2)) of optimum", Criterion8},
      {"toll soundness: discrete, closed form, projected gradient", Criterion9},
      {"integer example is identifying but not controlling", Criterion10},
      {"vertex cover reduction: optimum and extracted covers", Criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s [%s] (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs,
                o.failures ? "; first failure: " : "", o.first_failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
