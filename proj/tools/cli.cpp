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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ctlsets/explicit_list.hpp"
#include "ctlsets/flow.hpp"
#include "ctlsets/instances.hpp"
#include "ctlsets/io.hpp"
#include "ctlsets/linear.hpp"
#include "ctlsets/matroid.hpp"
#include "ctlsets/path.hpp"
#include "ctlsets/polymatroid.hpp"
#include "ctlsets/tolls.hpp"

namespace ctlsets::cli {
namespace {

struct Caps {
  std::int64_t max_paths = 100000;
  std::int64_t max_subsets = std::int64_t{1} << 24;
  int max_ground = 20;
};

// CTLSETS_MAX_PATHS, CTLSETS_MAX_SUBSETS and CTLSETS_MAX_GROUND override the
// built-in defaults; flags override both.
Caps DefaultCaps() {
  Caps caps;
  auto read = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) {
      try {
        slot = static_cast<std::remove_reference_t<decltype(slot)>>(std::stoll(v));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidParams, std::string("bad value for ") + name);
      }
    }
  };
  read("CTLSETS_MAX_PATHS", caps.max_paths);
  read("CTLSETS_MAX_SUBSETS", caps.max_subsets);
  read("CTLSETS_MAX_GROUND", caps.max_ground);
  return caps;
}

// FNV-1a over the canonical serialization of the inputs.
std::string Digest(const std::vector<Json>& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& j : inputs) {
    for (unsigned char c : j.dump()) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

struct Outcome {
  Json result;
  int exit_code = kExitOk;
};

struct Options {
  Caps caps;
  std::string instance;
  std::string weights;
  std::string verify;
  std::string kind;
  int rank = -1;
  std::string s_spec;
  bool has_s = false;
  bool general = false;
  bool exact = false;
  std::string matroid;
  std::string polymatroid;
  std::string basis;
  std::string solutions;
  std::string mode;
  std::string target;
  std::string cost;
  std::string margin = "0";
  bool nonnegative = false;
  std::string family;
  int k = 3;
  std::string graph;
  int vertices = -1;
  int copies = 1;
  std::string base;
  int arc = 0;
  int size = 2;
  int nodes = 6;
  double prob = 0.5;
  std::uint64_t seed = 1;
  std::string out;
};

Json LabelsFor(const ElementSet& set, const InstanceMeta& meta) {
  std::map<int, std::string> names;
  for (const auto& [label, id] : meta.labels) {
    if (!names.count(id)) names[id] = label;
  }
  Json out = Json::array();
  for (int id : set) {
    const auto it = names.find(id);
    out.push_back(it == names.end() ? std::to_string(id) : it->second);
  }
  return out;
}

WeightedGroundSet LoadWeights(const Options& opt,
                              const std::optional<WeightedGroundSet>& embedded,
                              int size, std::vector<Json>& inputs) {
  if (!opt.weights.empty()) {
    inputs.push_back(ReadJsonFile(opt.weights));
    auto w = WeightsFromJson(inputs.back());
    if (w.size() != size) {
      throw Error(ErrorCode::kInvalidParams, "one weight per element expected");
    }
    return w;
  }
  if (embedded) return *embedded;
  return WeightedGroundSet::Unit(size);
}

InstanceFile LoadInstance(const Options& opt, std::vector<Json>& inputs) {
  inputs.push_back(ReadJsonFile(opt.instance));
  return InstanceFromJson(inputs.back());
}

PathCaps ToPathCaps(const Caps& caps) {
  return {caps.max_paths, caps.max_subsets};
}

Json ComponentsJson(const std::vector<ElementSet>& partition) {
  Json out = Json::array();
  for (const auto& c : partition) out.push_back(c);
  return out;
}

Outcome FlowIdentify(const Options& opt, std::vector<Json>& inputs) {
  const auto file = LoadInstance(opt, inputs);
  const auto& inst = file.instance;
  Outcome o;
  if (!opt.verify.empty()) {
    inputs.push_back(ReadJsonFile(opt.verify));
    const Json& spec = inputs.back();
    const Json& ids = spec.is_object() ? spec.at("S") : spec;
    ElementSet s;
    for (const auto& id : ids) {
      s.push_back(id.is_string() ? ParseSetSpec(id.get<std::string>(), inst.meta,
                                                inst.graph.arc_count())
                                       .at(0)
                                 : id.get<int>());
    }
    s = NormalizeSet(s, inst.graph.arc_count());
    const auto v = VerifyFlowIdentifying(inst.graph, inst.st, s);
    o.result["S"] = s;
    o.result["identifying"] = v.identifying;
    if (!v.identifying) {
      Json cycle = Json::array();
      for (const auto& step : v.cycle) {
        cycle.push_back({{"arc", step.arc}, {"forward", step.forward}});
      }
      o.result["cycle"] = cycle;
      o.result["flow_a"] = VectorToJson(v.flow_a);
      o.result["flow_b"] = VectorToJson(v.flow_b);
      o.exit_code = kExitFalse;
    }
    return o;
  }
  const auto w = LoadWeights(opt, file.weights, inst.graph.arc_count(), inputs);
  const auto r = MinWeightFlowIdentifying(inst.graph, inst.st, w);
  o.result["S"] = r.identifying_set;
  o.result["labels"] = LabelsFor(r.identifying_set, inst.meta);
  o.result["E_prime"] = r.relevant_arcs;
  o.result["forest"] = r.forest;
  o.result["weight"] = ToString(r.total_weight);
  o.result["size"] = r.identifying_set.size();
  o.result["verified"] =
      VerifyFlowIdentifying(inst.graph, inst.st, r.identifying_set).identifying;
  return o;
}

Outcome PathVerify(const Options& opt, std::vector<Json>& inputs) {
  const auto file = LoadInstance(opt, inputs);
  const auto& inst = file.instance;
  const ElementSet s = ParseSetSpec(opt.s_spec, inst.meta, inst.graph.arc_count());
  const bool dag = !opt.general && IsAcyclic(inst.graph);
  const auto v = dag ? VerifyPathIdentifyingDag(inst.graph, inst.st, s)
                     : VerifyPathIdentifyingGeneral(inst.graph, inst.st, s,
                                                    opt.caps.max_paths);
  Outcome o;
  o.result["S"] = s;
  o.result["method"] = dag ? "dag" : "enumeration";
  o.result["identifying"] = v.identifying;
  if (!v.identifying) {
    o.result["path_a"] = v.path_a;
    o.result["path_b"] = v.path_b;
    o.exit_code = kExitFalse;
  }
  return o;
}

Json PathResultJson(const PathIdentifyResult& r, const InstanceMeta& meta) {
  Json out;
  out["identifying_set"] = r.identifying_set;
  out["labels"] = LabelsFor(r.identifying_set, meta);
  out["weight"] = ToString(r.total_weight);
  out["size"] = r.identifying_set.size();
  out["method"] = PathMethodName(r.method);
  if (r.approx_bound) out["approx_bound"] = *r.approx_bound;
  return out;
}

Outcome PathExact(const Options& opt, std::vector<Json>& inputs) {
  const auto file = LoadInstance(opt, inputs);
  const auto& inst = file.instance;
  const auto w = LoadWeights(opt, file.weights, inst.graph.arc_count(), inputs);
  const auto r = ExactMinPathIdentifying(inst.graph, inst.st, w, ToPathCaps(opt.caps));
  Outcome o;
  o.result = PathResultJson(r, inst.meta);
  o.result["verified"] = VerifyPathIdentifyingGeneral(inst.graph, inst.st,
                                                      r.identifying_set,
                                                      opt.caps.max_paths)
                             .identifying;
  return o;
}

Outcome PathApprox(const Options& opt, std::vector<Json>& inputs) {
  const auto file = LoadInstance(opt, inputs);
  const auto& inst = file.instance;
  const auto w = LoadWeights(opt, file.weights, inst.graph.arc_count(), inputs);
  const auto r = ApproxMinPathIdentifyingDag(inst.graph, inst.st, w);
  Outcome o;
  o.result = PathResultJson(r, inst.meta);
  o.result["verified"] =
      VerifyPathIdentifyingDag(inst.graph, inst.st, r.identifying_set).identifying;
  return o;
}

Outcome PathGap(const Options& opt, std::vector<Json>& inputs) {
  const auto file = LoadInstance(opt, inputs);
  const auto& inst = file.instance;
  const auto gap = ComputeGapRatio(inst.graph, inst.st, ToPathCaps(opt.caps));
  Outcome o;
  o.result["ratio"] = ToString(gap.ratio);
  o.result["approx_size"] = gap.approx_size;
  o.result["optimum_size"] = gap.optimum_size;
  o.result["within_bound"] = gap.within_bound;
  return o;
}

Outcome MatroidIdentify(const Options& opt, std::vector<Json>& inputs) {
  Json spec;
  if (!opt.matroid.empty()) {
    spec = ReadJsonFile(opt.matroid);
  } else if (opt.kind == "graphic") {
    const Json graph = ReadJsonFile(opt.graph);
    spec = {{"family", "graphic"}, {"nodes", graph.at("nodes")}, {"arcs", graph.at("arcs")}};
  } else if (opt.kind == "uniform") {
    spec = {{"family", "uniform"}, {"rank", opt.rank}, {"size", opt.size}};
  } else if (opt.kind == "free") {
    spec = {{"family", "free"}, {"size", opt.size}};
  } else {
    throw Error(ErrorCode::kInvalidParams,
                "give --matroid, or --kind graphic|uniform|free");
  }
  inputs.push_back(spec);
  const auto m = MatroidFromJson(spec);
  Outcome o;
  if (opt.has_s) {
    const ElementSet s = ParseSetSpec(opt.s_spec, {}, m.ground_size());
    const auto v = VerifyMatroidIdentifying(m, s, opt.caps.max_ground);
    o.result["S"] = s;
    o.result["identifying"] = v.identifying;
    if (!v.identifying) {
      o.result["circuit"] = v.circuit;
      o.result["basis_a"] = v.basis_a;
      o.result["basis_b"] = v.basis_b;
      o.exit_code = kExitFalse;
    }
    return o;
  }
  const auto w = LoadWeights(opt, std::nullopt, m.ground_size(), inputs);
  const auto r = MinWeightMatroidIdentifying(m, w);
  o.result["identifying_set"] = r.identifying_set;
  o.result["weight"] = ToString(r.total_weight);
  o.result["components"] = ComponentsJson(r.components.partition);
  return o;
}

Outcome PolymatroidIdentify(const Options& opt, std::vector<Json>& inputs) {
  inputs.push_back(ReadJsonFile(opt.polymatroid));
  const auto f = PolymatroidFromJson(inputs.back());
  Outcome o;
  if (opt.has_s) {
    const ElementSet s = ParseSetSpec(opt.s_spec, {}, f.ground_size());
    const auto v = VerifyPolymatroidIdentifying(f, s, opt.caps.max_ground);
    o.result["S"] = s;
    o.result["identifying"] = v.identifying;
    if (!v.identifying) {
      o.result["component"] = v.component;
      o.result["decreased"] = v.decreased;
      o.result["increased"] = v.increased;
      o.result["base_a"] = VectorToJson(v.base_a);
      o.result["base_b"] = VectorToJson(v.base_b);
      o.exit_code = kExitFalse;
    }
    return o;
  }
  const auto w = LoadWeights(opt, std::nullopt, f.ground_size(), inputs);
  const auto r = MinWeightPolymatroidIdentifying(f, w, opt.caps.max_ground);
  o.result["identifying_set"] = r.identifying_set;
  o.result["weight"] = ToString(r.total_weight);
  o.result["components"] = ComponentsJson(r.components.partition);
  return o;
}

Outcome LinearIdentify(const Options& opt, std::vector<Json>& inputs) {
  inputs.push_back(ReadJsonFile(opt.basis));
  const auto basis = BasisFromJson(inputs.back());
  Outcome o;
  if (opt.has_s) {
    const ElementSet s = ParseSetSpec(opt.s_spec, {}, basis.dimension());
    const auto v = VerifyIdentifyingFromBasis(basis, s);
    o.result["S"] = s;
    o.result["identifying"] = v.identifying;
    if (!v.identifying) {
      o.result["direction"] = VectorToJson(v.direction);
      o.exit_code = kExitFalse;
    }
    return o;
  }
  const auto w = LoadWeights(opt, std::nullopt, basis.dimension(), inputs);
  const auto r = MinWeightIdentifyingFromBasis(basis, w);
  o.result["identifying_set"] = r.identifying_set;
  o.result["weight"] = ToString(r.total_weight);
  o.result["dimension"] = basis.k();
  return o;
}

Outcome ExplicitIdentify(const Options& opt, std::vector<Json>& inputs) {
  inputs.push_back(ReadJsonFile(opt.solutions));
  const auto x = SolutionsFromJson(inputs.back());
  Outcome o;
  if (opt.has_s) {
    const ElementSet s = ParseSetSpec(opt.s_spec, {}, x.dimension());
    const auto v = VerifyExplicitIdentifying(x, s);
    o.result["S"] = s;
    o.result["identifying"] = v.identifying;
    if (!v.identifying) {
      o.result["witness"] = {StateToJson(x[v.witness.first]),
                             StateToJson(x[v.witness.second])};
      o.exit_code = kExitFalse;
    }
    return o;
  }
  const auto w = LoadWeights(opt, std::nullopt, x.dimension(), inputs);
  const auto r = opt.exact
                     ? ExactIdentifying(x, w, static_cast<std::uint64_t>(
                                                  opt.caps.max_subsets))
                     : GreedyIdentifying(x, w);
  o.result["identifying_set"] = r.identifying_set;
  o.result["weight"] = ToString(r.total_weight);
  o.result["method"] = opt.exact ? "exact" : "greedy";
  if (!opt.exact) {
    Json trace = Json::array();
    for (const auto& step : r.trace) {
      trace.push_back({{"element", step.element},
                       {"newly_separated", step.newly_separated},
                       {"weight", ToString(step.weight)}});
    }
    o.result["trace"] = trace;
  }
  return o;
}

CostOracle CostFromJson(const Json& j) {
  if (j.contains("linear")) return LinearCost(VectorFromJson(j.at("linear")));
  if (j.contains("quadratic")) {
    const Json& q = j.at("quadratic");
    const auto r = VectorFromJson(q.at("r"));
    const auto a = q.contains("a") ? VectorFromJson(q.at("a"))
                                   : RationalVector(r.size(), Rational(0));
    return QuadraticCost(r, a);
  }
  throw Error(ErrorCode::kInvalidParams, "cost must be linear or quadratic");
}

std::vector<std::string> SplitComma(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) parts.push_back(item);
  return parts;
}

Outcome Tolls(const Options& opt, std::vector<Json>& inputs) {
  inputs.push_back(ReadJsonFile(opt.instance));
  const Json instance = inputs.back();
  inputs.push_back(ReadJsonFile(opt.cost));
  const Json cost_json = inputs.back();
  Outcome o;
  if (opt.mode == "discrete" || opt.mode == "check") {
    const auto x = SolutionsFromJson(instance);
    const ElementSet s = ParseSetSpec(opt.s_spec, {}, x.dimension());
    if (opt.mode == "check") {
      std::vector<CostOracle> costs;
      if (cost_json.contains("costs")) {
        for (const auto& c : cost_json.at("costs")) costs.push_back(CostFromJson(c));
      } else {
        costs.push_back(CostFromJson(cost_json));
      }
      const auto v = ControllingCounterexampleCheck(x, s, costs);
      o.result["identifying"] = v.identifying;
      o.result["controlling"] = v.controlling;
      if (!v.controlling) {
        o.result["cost_index"] = v.cost_index;
        o.result["target"] = StateToJson(x[v.target_index]);
        Json rows = Json::array();
        for (std::size_t i = 0; i < v.system.size(); ++i) {
          rows.push_back({{"against", StateToJson(x[v.system_states[i]])},
                          {"coefficients", VectorToJson(v.system[i].coefficients)},
                          {"bound", ToString(v.system[i].bound)}});
        }
        o.result["system"] = rows;
        o.result["farkas"] = VectorToJson(v.farkas);
        o.exit_code = kExitFalse;
      }
      return o;
    }
    const auto cost = CostFromJson(cost_json);
    const StateVector target = StateFromJson(Json(opt.target), x.dimension());
    DiscreteTollOptions options;
    options.margin = ParseRational(opt.margin);
    options.nonnegative = opt.nonnegative;
    const auto tolls = DiscreteTolls(x, s, cost, target, options);
    o.result = TollsToJson(tolls);
    const Rational at_target = TolledCost(cost, tolls, ToRational(target));
    bool optimal = true;
    for (const auto& y : x.vectors()) {
      optimal = optimal && at_target <= TolledCost(cost, tolls, ToRational(y));
    }
    o.result["target_optimal"] = optimal;
    return o;
  }
  if (opt.mode == "convex") {
    const auto basis = BasisFromJson(instance);
    const ElementSet s = ParseSetSpec(opt.s_spec, {}, basis.dimension());
    RationalVector target;
    for (const auto& part : SplitComma(opt.target)) target.push_back(ParseRational(part));
    const auto tolls = ConvexTolls(basis, s, CostFromJson(cost_json), target);
    o.result = TollsToJson(tolls);
    return o;
  }
  throw Error(ErrorCode::kInvalidParams, "mode must be discrete, convex or check");
}

UndirectedGraph ParseGraphSpec(const std::string& text, int vertices) {
  UndirectedGraph g;
  int max_vertex = -1;
  for (const auto& item : SplitComma(text)) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw Error(ErrorCode::kInvalidParams, "edges are written as a-b");
    }
    try {
      const int a = std::stoi(item.substr(0, dash));
      const int b = std::stoi(item.substr(dash + 1));
      g.edges.emplace_back(a, b);
      max_vertex = std::max({max_vertex, a, b});
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParams, "bad edge " + item);
    }
  }
  g.vertices = vertices >= 0 ? vertices : max_vertex + 1;
  return g;
}

Outcome Generate(const Options& opt, std::vector<Json>& inputs) {
  GeneratedInstance inst;
  if (opt.family == "tight-gap") {
    inst = GenTightGapFamily(opt.k);
  } else if (opt.family == "vc-dag") {
    inst = GenVertexCoverDag(ParseGraphSpec(opt.graph, opt.vertices), opt.copies);
  } else if (opt.family == "bundle") {
    inputs.push_back(ReadJsonFile(opt.base));
    const auto base = InstanceFromJson(inputs.back());
    inst = GenBundleInstance(base.instance.graph, base.instance.st, opt.arc, opt.size);
  } else if (opt.family == "random-dag") {
    inst = GenRandomDag(opt.nodes, opt.prob, opt.seed);
  } else if (opt.family == "random-digraph") {
    inst = GenRandomDigraph(opt.nodes, opt.prob, opt.seed);
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown family " + opt.family);
  }
  Outcome o;
  o.result = InstanceToJson(inst);
  return o;
}

int ExitFor(ErrorCode code) {
  if (IsCapError(code)) return kExitCap;
  if (code == ErrorCode::kInvalidParams) return kExitUsage;
  return kExitFalse;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options opt;
  try {
    opt.caps = DefaultCaps();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Identifying and controlling sets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-paths", opt.caps.max_paths, "Cap on enumerated s-t paths");
  app.add_option("--max-subsets", opt.caps.max_subsets,
                 "Cap on search nodes or enumerated subsets");
  app.add_option("--max-ground", opt.caps.max_ground,
                 "Largest ground set for subset enumeration");

  using Handler = std::function<Outcome(const Options&, std::vector<Json>&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };
  std::map<CLI::App*, CLI::Option*> s_options;
  auto add_s = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--S", opt.s_spec, "Arc ids or labels, comma separated");
    if (required) o->required();
    s_options[sub] = o;
  };

  auto* flow = add("flow-identify", "Minimum-weight flow-identifying set", FlowIdentify);
  flow->add_option("instance", opt.instance)->required();
  flow->add_option("--weights", opt.weights);
  flow->add_option("--verify", opt.verify, "JSON list of arc ids or labels to check");

  auto* pverify = add("path-verify", "Check whether S identifies the s-t paths", PathVerify);
  pverify->add_option("instance", opt.instance)->required();
  add_s(pverify, true);
  pverify->add_flag("--general", opt.general, "Enumerate paths even on DAGs");

  auto* pexact = add("path-exact", "Exact minimum path-identifying set", PathExact);
  pexact->add_option("instance", opt.instance)->required();
  pexact->add_option("--weights", opt.weights);

  auto* papprox = add("path-approx", "Flow-based path-identifying set on a DAG", PathApprox);
  papprox->add_option("instance", opt.instance)->required();
  papprox->add_option("--weights", opt.weights);

  auto* pgap = add("path-gap", "Flow set size versus path optimum", PathGap);
  pgap->add_option("instance", opt.instance)->required();

  auto* mat = add("matroid-identify", "Identifying sets for matroid bases", MatroidIdentify);
  mat->add_option("--matroid", opt.matroid, "Matroid description (JSON)");
  mat->add_option("--kind", opt.kind)->check(CLI::IsMember({"graphic", "uniform", "free"}));
  mat->add_option("--graph", opt.graph, "Graph file for --kind graphic");
  mat->add_option("--rank", opt.rank);
  mat->add_option("--size", opt.size);
  mat->add_option("--weights", opt.weights);
  add_s(mat, false);

  auto* poly = add("polymatroid-identify", "Identifying sets for polymatroid bases",
                   PolymatroidIdentify);
  poly->add_option("--polymatroid", opt.polymatroid)->required();
  poly->add_option("--weights", opt.weights);
  add_s(poly, false);

  auto* lin = add("linear-identify", "Identifying sets from an affine basis", LinearIdentify);
  lin->add_option("--basis", opt.basis)->required();
  lin->add_option("--weights", opt.weights);
  add_s(lin, false);

  auto* expl = add("explicit-identify", "Identifying sets for listed states",
                   ExplicitIdentify);
  expl->add_option("--solutions", opt.solutions)->required();
  expl->add_option("--weights", opt.weights);
  expl->add_flag("--exact", opt.exact, "Enumerate subsets instead of greedy");
  add_s(expl, false);

  auto* tolls = add("tolls", "Toll vectors supported on S", Tolls);
  tolls->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"discrete", "convex", "check"}));
  tolls->add_option("--instance", opt.instance)->required();
  tolls->add_option("--cost", opt.cost)->required();
  tolls->add_option("--target", opt.target);
  tolls->add_option("--margin", opt.margin);
  tolls->add_flag("--nonnegative", opt.nonnegative);
  add_s(tolls, true);

  auto* gen = add("gen", "Generate an instance", Generate);
  gen->add_option("--family", opt.family)
      ->required()
      ->check(CLI::IsMember(
          {"tight-gap", "vc-dag", "bundle", "random-dag", "random-digraph"}));
  gen->add_option("--k", opt.k);
  gen->add_option("--graph", opt.graph, "Undirected edges such as 0-1,1-2");
  gen->add_option("--vertices", opt.vertices);
  gen->add_option("--copies", opt.copies);
  gen->add_option("--base", opt.base);
  gen->add_option("--arc", opt.arc);
  gen->add_option("--size", opt.size);
  gen->add_option("--nodes", opt.nodes);
  gen->add_option("--p", opt.prob);
  gen->add_option("--seed", opt.seed);
  gen->add_option("--out", opt.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto& [sub, handler] : handlers) {
    if (sub->parsed()) {
      const auto s_option = s_options.find(sub);
      opt.has_s = s_option != s_options.end() && s_option->second->count() > 0;
      const auto start = std::chrono::steady_clock::now();
      std::vector<Json> inputs;
      Json report;
      report["subcommand"] = sub->get_name();
      int code = kExitOk;
      try {
        Outcome outcome = handler(opt, inputs);
        if (sub == gen) {
          const std::string text = outcome.result.dump(2) + "\n";
          if (opt.out.empty()) {
            out << text;
          } else {
            std::ofstream file(opt.out);
            if (!file) throw Error(ErrorCode::kInvalidParams, "cannot write " + opt.out);
            file << text;
          }
          return kExitOk;
        }
        report["instance_digest"] = Digest(inputs);
        report["result"] = std::move(outcome.result);
        report["caps_hit"] = false;
        code = outcome.exit_code;
      } catch (const Error& e) {
        err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
        if (e.code() == ErrorCode::kInvalidParams) return kExitUsage;
        report["instance_digest"] = Digest(inputs);
        report["error"] = {{"code", ErrorCodeName(e.code())}, {"message", e.what()}};
        report["caps_hit"] = IsCapError(e.code());
        code = ExitFor(e.code());
      }
      const auto elapsed = std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start);
      err << "wall time: " << elapsed.count() << " ms\n";
      out << report.dump(2) << "\n";
      return code;
    }
  }
  return kExitUsage;
}

}  // namespace ctlsets::cli
