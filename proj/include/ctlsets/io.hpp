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

#ifndef CTLSETS_IO_HPP_
#define CTLSETS_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ctlsets/core.hpp"
#include "ctlsets/explicit_list.hpp"
#include "ctlsets/instances.hpp"
#include "ctlsets/linalg.hpp"
#include "ctlsets/linear.hpp"
#include "ctlsets/matroid.hpp"
#include "ctlsets/polymatroid.hpp"
#include "ctlsets/tolls.hpp"

namespace ctlsets {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; plain JSON integers are accepted too.
Json RationalToJson(const Rational& value);
Rational RationalFromJson(const Json& j);
Json VectorToJson(const RationalVector& v);
RationalVector VectorFromJson(const Json& j);

// {"nodes": n, "arcs": [[u, v], ...], "s": s, "t": t,
//  "weights": ["p/q", ...]?, "meta": {...}?}
struct InstanceFile {
  GeneratedInstance instance;
  std::optional<WeightedGroundSet> weights;
};
Json InstanceToJson(const GeneratedInstance& instance);
InstanceFile InstanceFromJson(const Json& j);

// Either a bare list or {"weights": [...]}.
WeightedGroundSet WeightsFromJson(const Json& j);

// {"points": [[...], ...]}
AffineBasis BasisFromJson(const Json& j);

// {"dim": n, "vectors": ["0101", ...]}; vectors may also be integer lists.
SolutionList SolutionsFromJson(const Json& j);
Json StateToJson(const StateVector& x);
StateVector StateFromJson(const Json& j, int dimension);

// {"family": "uniform" | "graphic" | "partition" | "free", ...}
MatroidOracle MatroidFromJson(const Json& j);
// {"ground_size": n, "table": [...]} indexed by bit mask, or with "table" an
// object keyed by comma-separated subsets ("" for the empty set), or
// {"family": "budget-additive" | "coverage" | "matroid-rank", ...}
PolymatroidOracle PolymatroidFromJson(const Json& j);

// {"gamma": {"id": "p/q"}} over the support.
Json TollsToJson(const TollVector& tolls);

Json SetToJson(const ElementSet& set);

// Comma-separated ids or instance labels, e.g. "e1,e2,7". An empty string
// is the empty set.
ElementSet ParseSetSpec(std::string_view text, const InstanceMeta& meta,
                        int size);

Json ReadJsonFile(const std::string& path);

}  // namespace ctlsets

#endif  // CTLSETS_IO_HPP_
