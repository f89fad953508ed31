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

#include "ctlsets/fourier_motzkin.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace ctlsets {
namespace {

// A row together with its multipliers over the input rows.
struct Row {
  RationalVector a;
  Rational b;
  RationalVector origin;
};

bool Zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Row Combine(const Row& p, const Rational& sp, const Row& q, const Rational& sq) {
  Row out{RationalVector(p.a.size()), sp * p.b + sq * q.b,
          RationalVector(p.origin.size())};
  for (std::size_t i = 0; i < p.a.size(); ++i) out.a[i] = sp * p.a[i] + sq * q.a[i];
  for (std::size_t i = 0; i < p.origin.size(); ++i) {
    out.origin[i] = sp * p.origin[i] + sq * q.origin[i];
  }
  return out;
}

// Scales a row so its first nonzero coefficient has magnitude 1, which lets
// duplicates be dropped by comparing coefficients.
void Normalize(Row& row) {
  for (const auto& c : row.a) {
    if (c == 0) continue;
    const Rational s = 1 / abs(c);
    for (auto& v : row.a) v *= s;
    row.b *= s;
    for (auto& v : row.origin) v *= s;
    return;
  }
}

std::vector<Row> Deduplicate(std::vector<Row> rows) {
  // Among rows with equal coefficients only the tightest bound matters.
  std::sort(rows.begin(), rows.end(), [](const Row& p, const Row& q) {
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
  });
  std::vector<Row> out;
  for (auto& r : rows) {
    if (!out.empty() && out.back().a == r.a) continue;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

EliminationResult SolveInequalities(const std::vector<LinearInequality>& input,
                                    int variables,
                                    const EliminationCaps& caps) {
  if (variables > caps.max_variables) {
    throw Error(ErrorCode::kEliminationExplosion,
                "too many variables for Fourier-Motzkin elimination");
  }
  const std::size_t m = input.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<int>(input[i].coefficients.size()) != variables) {
      throw Error(ErrorCode::kInvalidParams, "inequality has wrong width");
    }
    Row r{input[i].coefficients, input[i].bound, RationalVector(m, Rational(0))};
    r.origin[i] = 1;
    rows.push_back(std::move(r));
  }

  EliminationResult result;
  // stages[j] holds the system over variables j..n-1 before eliminating j.
  std::vector<std::vector<Row>> stages;
  for (int j = 0; j <= variables; ++j) {
    for (auto& r : rows) Normalize(r);
    rows = Deduplicate(std::move(rows));
    for (const auto& r : rows) {
      if (Zero(r.a) && r.b < 0) {
        result.farkas = r.origin;
        return result;
      }
    }
    stages.push_back(rows);
    if (j == variables) break;
    std::vector<Row> upper, lower, next;
    for (auto& r : rows) {
      if (r.a[j] > 0) {
        upper.push_back(r);
      } else if (r.a[j] < 0) {
        lower.push_back(r);
      } else if (!Zero(r.a) || r.b < 0) {
        next.push_back(r);
      }
    }
    if (next.size() + upper.size() * lower.size() > caps.max_rows) {
      throw Error(ErrorCode::kEliminationExplosion,
                  "Fourier-Motzkin system grew beyond the row cap");
    }
    for (const auto& p : upper) {
      for (const auto& q : lower) {
        next.push_back(Combine(p, -q.a[j], q, p.a[j]));
      }
    }
    rows = std::move(next);
  }

  result.feasible = true;
  result.solution.assign(variables, Rational(0));
  for (int j = variables - 1; j >= 0; --j) {
    std::optional<Rational> lo, hi;
    for (const auto& r : stages[j]) {
      if (r.a[j] == 0) continue;
      Rational rest = r.b;
      for (int i = j + 1; i < variables; ++i) rest -= r.a[i] * result.solution[i];
      const Rational limit = rest / r.a[j];
      if (r.a[j] > 0) {
        if (!hi || limit < *hi) hi = limit;
      } else {
        if (!lo || limit > *lo) lo = limit;
      }
    }
    Rational value = 0;
    if (lo && value < *lo) value = *lo;
    if (hi && value > *hi) value = *hi;
    result.solution[j] = value;
  }
  return result;
}

}  // namespace ctlsets
