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

// Python bindings. Rationals cross the boundary as "p/q" strings, element
// sets as sorted lists of ids and graphs as (nodes, arcs, s, t).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "ctlsets/core.hpp"
#include "ctlsets/explicit_list.hpp"
#include "ctlsets/flow.hpp"
#include "ctlsets/graph.hpp"
#include "ctlsets/instances.hpp"
#include "ctlsets/io.hpp"
#include "ctlsets/matroid.hpp"
#include "ctlsets/path.hpp"
#include "ctlsets/polymatroid.hpp"

namespace py = pybind11;

namespace ctlsets {
namespace {

using ArcList = std::vector<std::pair<int, int>>;
using WeightList = std::optional<std::vector<std::string>>;

Digraph MakeGraph(int nodes, const ArcList& arcs) {
  std::vector<Arc> out;
  for (const auto& [u, v] : arcs) out.push_back({u, v});
  return Digraph(nodes, std::move(out));
}

WeightedGroundSet MakeWeights(const WeightList& weights, int size) {
  if (!weights) return WeightedGroundSet::Unit(size);
  std::vector<Rational> out;
  for (const auto& w : *weights) out.push_back(ParseRational(w));
  if (static_cast<int>(out.size()) != size) {
    throw Error(ErrorCode::kInvalidParams, "weight vector size mismatch");
  }
  return WeightedGroundSet(std::move(out));
}

std::vector<std::string> Strings(const RationalVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(ToString(x));
  return out;
}

py::dict FlowIdentify(int nodes, const ArcList& arcs, int s, int t,
                      const WeightList& weights) {
  const Digraph g = MakeGraph(nodes, arcs);
  const auto r = MinWeightFlowIdentifying(g, {s, t}, MakeWeights(weights, g.arc_count()));
  py::dict d;
  d["identifying_set"] = r.identifying_set;
  d["relevant_arcs"] = r.relevant_arcs;
  d["total_weight"] = ToString(r.total_weight);
  return d;
}

py::dict VerifyFlow(int nodes, const ArcList& arcs, int s, int t, const ElementSet& subset) {
  const auto v = VerifyFlowIdentifying(MakeGraph(nodes, arcs), {s, t}, subset);
  py::dict d;
  d["identifying"] = v.identifying;
  if (!v.identifying) {
    d["flow_a"] = Strings(v.flow_a);
    d["flow_b"] = Strings(v.flow_b);
  }
  return d;
}

py::dict PathResult(const PathIdentifyResult& r) {
  py::dict d;
  d["identifying_set"] = r.identifying_set;
  d["total_weight"] = ToString(r.total_weight);
  if (r.approx_bound) d["approx_bound"] = *r.approx_bound;
  return d;
}

py::dict PathExact(int nodes, const ArcList& arcs, int s, int t, const WeightList& weights,
                   std::int64_t max_paths, std::int64_t max_subsets) {
  const Digraph g = MakeGraph(nodes, arcs);
  return PathResult(ExactMinPathIdentifying(g, {s, t}, MakeWeights(weights, g.arc_count()),
                                            PathCaps{max_paths, max_subsets}));
}

py::dict PathApprox(int nodes, const ArcList& arcs, int s, int t, const WeightList& weights) {
  const Digraph g = MakeGraph(nodes, arcs);
  return PathResult(
      ApproxMinPathIdentifyingDag(g, {s, t}, MakeWeights(weights, g.arc_count())));
}

py::dict VerifyPath(int nodes, const ArcList& arcs, int s, int t, const ElementSet& subset,
                    std::int64_t max_paths) {
  const Digraph g = MakeGraph(nodes, arcs);
  const auto v = IsAcyclic(g) ? VerifyPathIdentifyingDag(g, {s, t}, subset)
                              : VerifyPathIdentifyingGeneral(g, {s, t}, subset, max_paths);
  py::dict d;
  d["identifying"] = v.identifying;
  if (!v.identifying) {
    d["path_a"] = v.path_a;
    d["path_b"] = v.path_b;
  }
  return d;
}

py::dict Gap(int nodes, const ArcList& arcs, int s, int t) {
  const auto r = ComputeGapRatio(MakeGraph(nodes, arcs), {s, t});
  py::dict d;
  d["ratio"] = ToString(r.ratio);
  d["approx_size"] = r.approx_size;
  d["optimum_size"] = r.optimum_size;
  d["within_bound"] = r.within_bound;
  return d;
}

py::dict MatroidIdentify(const std::string& spec, const WeightList& weights) {
  const auto m = MatroidFromJson(Json::parse(spec));
  const auto r = MinWeightMatroidIdentifying(m, MakeWeights(weights, m.ground_size()));
  py::dict d;
  d["identifying_set"] = r.identifying_set;
  d["total_weight"] = ToString(r.total_weight);
  d["components"] = r.components.partition;
  return d;
}

py::dict PolymatroidIdentify(const std::string& spec, const WeightList& weights) {
  const auto f = PolymatroidFromJson(Json::parse(spec));
  const auto r = MinWeightPolymatroidIdentifying(f, MakeWeights(weights, f.ground_size()));
  py::dict d;
  d["identifying_set"] = r.identifying_set;
  d["total_weight"] = ToString(r.total_weight);
  d["components"] = r.components.partition;
  return d;
}

py::dict ExplicitIdentify(int dim, const std::vector<StateVector>& vectors,
                          const WeightList& weights, bool exact) {
  const SolutionList x(dim, vectors);
  const auto w = MakeWeights(weights, dim);
  const auto r = exact ? ExactIdentifying(x, w) : GreedyIdentifying(x, w);
  py::dict d;
  d["identifying_set"] = r.identifying_set;
  d["total_weight"] = ToString(r.total_weight);
  return d;
}

std::string TightGapFamily(int k) { return InstanceToJson(GenTightGapFamily(k)).dump(); }

std::tuple<int, std::string, std::string> RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::Dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace
}  // namespace ctlsets

PYBIND11_MODULE(_ctlsets, m) {
  using namespace ctlsets;
  m.doc() = "Identifying and controlling sets over combinatorial solution spaces";
  static py::exception<Error> error(m, "CtlsetsError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string code(ErrorCodeName(e.code()));
      py::set_error(error, (code + ": " + e.what()).c_str());
    }
  });
  m.def("flow_identify", &FlowIdentify, py::arg("nodes"), py::arg("arcs"), py::arg("s"),
        py::arg("t"), py::arg("weights") = py::none());
  m.def("verify_flow", &VerifyFlow, py::arg("nodes"), py::arg("arcs"), py::arg("s"),
        py::arg("t"), py::arg("subset"));
  m.def("path_exact", &PathExact, py::arg("nodes"), py::arg("arcs"), py::arg("s"),
        py::arg("t"), py::arg("weights") = py::none(), py::arg("max_paths") = 100000,
        py::arg("max_subsets") = std::int64_t{1} << 24);
  m.def("path_approx", &PathApprox, py::arg("nodes"), py::arg("arcs"), py::arg("s"),
        py::arg("t"), py::arg("weights") = py::none());
  m.def("verify_path", &VerifyPath, py::arg("nodes"), py::arg("arcs"), py::arg("s"),
        py::arg("t"), py::arg("subset"), py::arg("max_paths") = 100000);
  m.def("gap_ratio", &Gap, py::arg("nodes"), py::arg("arcs"), py::arg("s"), py::arg("t"));
  m.def("matroid_identify", &MatroidIdentify, py::arg("spec"),
        py::arg("weights") = py::none());
  m.def("polymatroid_identify", &PolymatroidIdentify, py::arg("spec"),
        py::arg("weights") = py::none());
  m.def("explicit_identify", &ExplicitIdentify, py::arg("dim"), py::arg("vectors"),
        py::arg("weights") = py::none(), py::arg("exact") = false);
  m.def("tight_gap_family", &TightGapFamily, py::arg("k"));
  m.def("cli", &RunCli, py::arg("args"));
}
