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

#include "ctlsets/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace ctlsets {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kInvalidParams,
                std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

template <typename T>
T Get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kInvalidParams, std::string("malformed ") + what);
  }
}

std::vector<int> IntList(const Json& j, const char* what) {
  return Get<std::vector<int>>(j, what);
}

}  // namespace

Json RationalToJson(const Rational& value) { return ToString(value); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw Error(ErrorCode::kInvalidParams,
              "rationals must be strings \"p/q\" or integers");
}

Json VectorToJson(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(RationalToJson(x));
  return out;
}

RationalVector VectorFromJson(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidParams, "expected a list");
  RationalVector out;
  for (const auto& x : j) out.push_back(RationalFromJson(x));
  return out;
}

Json InstanceToJson(const GeneratedInstance& instance) {
  Json arcs = Json::array();
  for (const auto& a : instance.graph.arcs()) arcs.push_back({a.tail, a.head});
  Json meta = Json::object();
  meta["construction"] = instance.meta.construction;
  meta["params"] = instance.meta.params;
  Json sets = Json::object();
  for (const auto& [name, ids] : instance.meta.arc_sets) sets[name] = ids;
  meta["arc_sets"] = sets;
  meta["labels"] = instance.meta.labels;
  return Json{{"nodes", instance.graph.node_count()},
              {"arcs", arcs},
              {"s", instance.st.source},
              {"t", instance.st.sink},
              {"meta", meta}};
}

InstanceFile InstanceFromJson(const Json& j) {
  InstanceFile out;
  const int nodes = Get<int>(Field(j, "nodes"), "node count");
  std::vector<Arc> arcs;
  for (const auto& a : Field(j, "arcs")) {
    const auto pair = IntList(a, "arc");
    if (pair.size() != 2) throw Error(ErrorCode::kInvalidParams, "arc needs 2 ends");
    arcs.push_back({pair[0], pair[1]});
  }
  out.instance.graph = Digraph(nodes, std::move(arcs));
  out.instance.st = {Get<int>(Field(j, "s"), "s"), Get<int>(Field(j, "t"), "t")};
  ValidateStPair(out.instance.graph, out.instance.st);
  if (j.contains("weights")) {
    out.weights = WeightsFromJson(j.at("weights"));
    if (out.weights->size() != out.instance.graph.arc_count()) {
      throw Error(ErrorCode::kInvalidParams, "one weight per arc expected");
    }
  }
  if (j.contains("meta")) {
    const Json& meta = j.at("meta");
    auto& m = out.instance.meta;
    if (meta.contains("construction")) {
      m.construction = Get<std::string>(meta.at("construction"), "construction");
    }
    if (meta.contains("params")) {
      for (const auto& [k, v] : meta.at("params").items()) {
        m.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    if (meta.contains("arc_sets")) {
      for (const auto& [k, v] : meta.at("arc_sets").items()) {
        m.arc_sets[k] = NormalizeSet(IntList(v, "arc set"),
                                     out.instance.graph.arc_count());
      }
    }
    if (meta.contains("labels")) {
      for (const auto& [k, v] : meta.at("labels").items()) {
        const int id = Get<int>(v, "label");
        if (id < 0 || id >= out.instance.graph.arc_count()) {
          throw Error(ErrorCode::kInvalidParams, "label refers to a missing arc");
        }
        m.labels[k] = id;
      }
    }
  }
  return out;
}

WeightedGroundSet WeightsFromJson(const Json& j) {
  const Json& list = j.is_object() ? Field(j, "weights") : j;
  return WeightedGroundSet(VectorFromJson(list));
}

AffineBasis BasisFromJson(const Json& j) {
  std::vector<RationalVector> points;
  for (const auto& p : Field(j, "points")) points.push_back(VectorFromJson(p));
  return AffineBasis(std::move(points));
}

StateVector StateFromJson(const Json& j, int dimension) {
  StateVector x;
  if (j.is_string()) {
    for (char c : j.get<std::string>()) {
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::kInvalidParams, "state strings hold digits only");
      }
      x.push_back(c - '0');
    }
  } else {
    x = IntList(j, "state");
  }
  if (static_cast<int>(x.size()) != dimension) {
    throw Error(ErrorCode::kInvalidParams, "state has wrong dimension");
  }
  return x;
}

Json StateToJson(const StateVector& x) {
  bool digits = true;
  for (int v : x) digits = digits && v >= 0 && v <= 9;
  if (!digits) return x;
  std::string s;
  for (int v : x) s.push_back(static_cast<char>('0' + v));
  return s;
}

SolutionList SolutionsFromJson(const Json& j) {
  const int dim = Get<int>(Field(j, "dim"), "dim");
  std::vector<StateVector> vectors;
  for (const auto& v : Field(j, "vectors")) vectors.push_back(StateFromJson(v, dim));
  return SolutionList(dim, std::move(vectors));
}

MatroidOracle MatroidFromJson(const Json& j) {
  const auto family = Get<std::string>(Field(j, "family"), "family");
  if (family == "uniform") {
    return UniformMatroid(Get<int>(Field(j, "rank"), "rank"),
                          Get<int>(Field(j, "size"), "size"));
  }
  if (family == "free") return FreeMatroid(Get<int>(Field(j, "size"), "size"));
  if (family == "graphic") {
    std::vector<Arc> arcs;
    for (const auto& a : Field(j, "arcs")) {
      const auto pair = IntList(a, "arc");
      if (pair.size() != 2) throw Error(ErrorCode::kInvalidParams, "arc needs 2 ends");
      arcs.push_back({pair[0], pair[1]});
    }
    return GraphicMatroid(Digraph(Get<int>(Field(j, "nodes"), "nodes"), arcs));
  }
  if (family == "partition") {
    std::vector<ElementSet> blocks;
    for (const auto& b : Field(j, "blocks")) blocks.push_back(IntList(b, "block"));
    return PartitionMatroid(blocks, IntList(Field(j, "caps"), "caps"));
  }
  throw Error(ErrorCode::kInvalidParams, "unknown matroid family " + family);
}

PolymatroidOracle PolymatroidFromJson(const Json& j) {
  if (j.contains("table")) {
    const int n = Get<int>(Field(j, "ground_size"), "ground_size");
    const Json& table = j.at("table");
    if (table.is_array()) return TablePolymatroid(n, VectorFromJson(table));
    // {"": "0", "0": "1", "0,1": "3/2", ...}: keys are comma-separated ids.
    if (n > 30) throw Error(ErrorCode::kInvalidParams, "table too large");
    std::vector<Rational> values(std::size_t{1} << n);
    std::vector<char> given(values.size(), 0);
    for (const auto& [key, value] : table.items()) {
      std::uint64_t mask = 0;
      for (int e : ParseSetSpec(key, {}, n)) mask |= std::uint64_t{1} << e;
      values[mask] = RationalFromJson(value);
      given[mask] = 1;
    }
    if (std::count(given.begin(), given.end(), 0) > 0) {
      throw Error(ErrorCode::kInvalidParams, "table must list every subset");
    }
    return TablePolymatroid(n, std::move(values));
  }
  const auto family = Get<std::string>(Field(j, "family"), "family");
  if (family == "budget-additive") {
    return BudgetAdditivePolymatroid(RationalFromJson(Field(j, "budget")),
                                     VectorFromJson(Field(j, "a")));
  }
  if (family == "coverage") {
    std::vector<ElementSet> covers;
    for (const auto& c : Field(j, "covers")) covers.push_back(IntList(c, "cover"));
    return CoveragePolymatroid(covers, VectorFromJson(Field(j, "item_weights")));
  }
  if (family == "matroid-rank") {
    return MatroidRankPolymatroid(MatroidFromJson(Field(j, "matroid")));
  }
  throw Error(ErrorCode::kInvalidParams, "unknown polymatroid family " + family);
}

Json TollsToJson(const TollVector& tolls) {
  Json gamma = Json::object();
  for (int e : tolls.support) gamma[std::to_string(e)] = ToString(tolls.gamma[e]);
  return Json{{"gamma", gamma}};
}

Json SetToJson(const ElementSet& set) { return Json(set); }

ElementSet ParseSetSpec(std::string_view text, const InstanceMeta& meta,
                        int size) {
  std::vector<int> ids;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                            : text.substr(comma + 1);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) continue;
    const auto label = meta.labels.find(std::string(token));
    if (label != meta.labels.end()) {
      ids.push_back(label->second);
      continue;
    }
    int id = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidParams,
                  "unknown arc label " + std::string(token));
    }
    ids.push_back(id);
  }
  return NormalizeSet(std::move(ids), size);
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidParams, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidParams, path + ": " + e.what());
  }
}

}  // namespace ctlsets
