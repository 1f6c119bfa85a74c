// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropical/geometry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "tropical/error.hpp"

namespace tropical {
namespace {

// a + b·ε, compared lexicographically.
struct EpsValue {
  Rational a;
  long b = 0;

  friend EpsValue operator+(const EpsValue& x, const EpsValue& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend bool operator<(const EpsValue& x, const EpsValue& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

// x[to] - x[from] <= bound, or < bound when strict.
struct DifferenceConstraint {
  int from;
  int to;
  Rational bound;
  bool strict;
};

class DifferenceSystem {
 public:
  explicit DifferenceSystem(int vars) : vars_(vars) {}

  void AddEquality(int j, int k, const Rational& value) {
    // x_j - x_k = value
    constraints_.push_back({k, j, value, false});
    constraints_.push_back({j, k, -value, false});
  }
  void AddStrict(int from, int to, const Rational& bound) {
    constraints_.push_back({from, to, bound, true});
  }
  std::size_t size() const { return constraints_.size(); }
  void Truncate(std::size_t size) { constraints_.resize(size); }

  // Shortest-path potentials from a virtual source, or nullopt when a
  // negative cycle (including a zero cycle through a strict edge) exists.
  std::optional<std::vector<EpsValue>> Potentials() const {
    std::vector<EpsValue> dist(vars_);
    for (int pass = 0; pass <= vars_; ++pass) {
      bool changed = false;
      for (const auto& c : constraints_) {
        EpsValue candidate = dist[c.from] + EpsValue{c.bound, c.strict ? -1 : 0};
        if (candidate < dist[c.to]) {
          dist[c.to] = std::move(candidate);
          changed = true;
        }
      }
      if (!changed) return dist;
    }
    return std::nullopt;
  }

  bool Feasible() const { return Potentials().has_value(); }

  // Concrete rational solution obtained by choosing ε small enough.
  std::optional<RationalVector> Solve() const {
    auto dist = Potentials();
    if (!dist) return std::nullopt;
    Rational eps(1);
    for (const auto& c : constraints_) {
      Rational lhs_a = (*dist)[c.to].a - (*dist)[c.from].a;
      long lhs_b = (*dist)[c.to].b - (*dist)[c.from].b;
      if (lhs_a < c.bound && lhs_b > 0) {
        Rational limit = (c.bound - lhs_a) / lhs_b;
        if (limit < eps) eps = limit;
      }
    }
    eps /= 2;
    RationalVector x(vars_);
    for (int k = 0; k < vars_; ++k) x[k] = (*dist)[k].a + eps * (*dist)[k].b;
    return x;
  }

 private:
  int vars_;
  std::vector<DifferenceConstraint> constraints_;
};

// Adds the constraints that pin hyperplane i's entry to `entry`.
void AddEntryConstraints(const Arrangement& arr, std::size_t i, Subset entry,
                         DifferenceSystem& system) {
  const int d = arr.d();
  const int anchor = std::countr_zero(entry);
  for (int j = 0; j < d; ++j) {
    if (j == anchor) continue;
    const Rational gap = arr.coord(i, anchor) - arr.coord(i, j);
    if (Contains(entry, j + 1)) {
      system.AddEquality(anchor, j, gap);
    } else {
      // x_j - v_ij < x_anchor - v_ia
      system.AddStrict(anchor, j, -gap);
    }
  }
}

void ValidateCandidate(const Arrangement& arr, const TypeVector& type) {
  if (type.size() != arr.n() || !type.FitsDimension(arr.d())) {
    throw Error(ErrorCode::kInvalidArgument,
                "type " + type.ToString() + " does not match arrangement (n=" +
                    std::to_string(arr.n()) + ", d=" + std::to_string(arr.d()) +
                    ")");
  }
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Components of the graph on [d] joining labels that share an entry; the
// realization set has dimension (components - 1).
int EqualityComponents(const TypeVector& type, int d) {
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  int components = d;
  for (Subset entry : type.entries()) {
    const int anchor = std::countr_zero(entry);
    for (int j : SubsetLabels(entry)) {
      int a = Find(parent, anchor);
      int b = Find(parent, j - 1);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

void EnumerateFrom(const Arrangement& arr, std::size_t i,
                   std::vector<Subset>& prefix, DifferenceSystem& system,
                   TypeSet& out) {
  if (i == arr.n()) {
    out.insert(TypeVector(prefix));
    return;
  }
  const Subset full = FullSubset(arr.d());
  for (Subset entry = 1; entry <= full; ++entry) {
    const std::size_t mark = system.size();
    AddEntryConstraints(arr, i, entry, system);
    if (system.Feasible()) {
      prefix.push_back(entry);
      EnumerateFrom(arr, i + 1, prefix, system, out);
      prefix.pop_back();
    }
    system.Truncate(mark);
  }
}

}  // namespace

TypeVector TypeOfPoint(const Arrangement& arr, const ProjectivePoint& x) {
  if (x.dim() != arr.d()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(x.dim()) +
                    " coordinates, arrangement has d=" + std::to_string(arr.d()));
  }
  std::vector<Subset> entries;
  entries.reserve(arr.n());
  for (std::size_t i = 0; i < arr.n(); ++i) {
    Rational best = x[0] - arr.coord(i, 0);
    Subset argmax = Singleton(1);
    for (int j = 1; j < arr.d(); ++j) {
      Rational value = x[j] - arr.coord(i, j);
      if (value > best) {
        best = std::move(value);
        argmax = Singleton(j + 1);
      } else if (value == best) {
        argmax |= Singleton(j + 1);
      }
    }
    entries.push_back(argmax);
  }
  return TypeVector(std::move(entries));
}

TypeVector ApexType(const Arrangement& arr, std::size_t i) {
  if (i >= arr.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "apex index " + std::to_string(i + 1) + " out of range");
  }
  return TypeOfPoint(arr, arr.apex(i));
}

GenericityReport CheckGenericity(const Arrangement& arr) {
  GenericityReport report;
  report.bound = static_cast<int>(arr.n()) + arr.d() - 1;
  for (std::size_t i = 0; i < arr.n(); ++i) {
    TypeVector type = ApexType(arr, i);
    ApexReport apex;
    apex.index = i;
    apex.total = TypeTotalSize(type);
    for (std::size_t l = 0; l < arr.n(); ++l) {
      if (l != i && SubsetSize(type[l]) >= 2) apex.offending.push_back(l);
    }
    report.generic = report.generic && apex.generic();
    report.apexes.push_back(std::move(apex));
  }
  return report;
}

bool IsGeneric(const Arrangement& arr) { return CheckGenericity(arr).generic; }

RealizationResult Realize(const Arrangement& arr, const TypeVector& type) {
  ValidateCandidate(arr, type);
  DifferenceSystem system(arr.d());
  for (std::size_t i = 0; i < arr.n(); ++i) {
    AddEntryConstraints(arr, i, type[i], system);
  }
  RealizationResult result;
  auto solution = system.Solve();
  if (!solution) return result;
  result.realizable = true;
  result.witness = Normalize(ProjectivePoint(std::move(*solution)));
  result.dimension = EqualityComponents(type, arr.d()) - 1;
  return result;
}

std::uint64_t CandidateCount(std::size_t n, int d) {
  const std::uint64_t per = (std::uint64_t{1} << d) - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / per) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= per;
  }
  return total;
}

TypeSet EnumerateTypes(const Arrangement& arr, std::uint64_t budget) {
  const std::uint64_t candidates = CandidateCount(arr.n(), arr.d());
  if (candidates > budget) {
    throw Error(ErrorCode::kResourceLimit,
                "type enumeration needs " + std::to_string(candidates) +
                    " candidates, budget is " + std::to_string(budget));
  }
  TypeSet out;
  std::vector<Subset> prefix;
  DifferenceSystem system(arr.d());
  EnumerateFrom(arr, 0, prefix, system, out);
  return out;
}

TypeVector Refine(const TypeVector& type, const OrderedPartition& partition) {
  std::vector<Subset> entries;
  entries.reserve(type.size());
  for (Subset entry : type.entries()) {
    Subset refined = 0;
    for (Subset block : partition.blocks()) {
      refined = entry & block;
      if (refined != 0) break;
    }
    if (refined == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partition does not cover type entry " + FormatSubset(entry));
    }
    entries.push_back(refined);
  }
  return TypeVector(std::move(entries));
}

Arrangement Perturb(const Arrangement& arr, std::size_t i,
                    const RationalVector& delta) {
  if (i >= arr.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "apex index " + std::to_string(i + 1) + " out of range");
  }
  if (static_cast<int>(delta.size()) != arr.d()) {
    throw Error(ErrorCode::kDimensionMismatch, "perturbation length differs from d");
  }
  std::vector<ProjectivePoint> apexes = arr.apexes();
  RationalVector moved = apexes[i].coords();
  for (int j = 0; j < arr.d(); ++j) moved[j] += delta[j];
  apexes[i] = ProjectivePoint(std::move(moved));
  return Arrangement(std::move(apexes));
}

Rational SafeRadius(const Arrangement& arr) {
  std::vector<Rational> values{Rational(0)};
  for (std::size_t i = 0; i < arr.n(); ++i) {
    for (int j = 0; j < arr.d(); ++j) {
      for (int k = 0; k < arr.d(); ++k) {
        if (j != k) values.push_back(arr.coord(i, j) - arr.coord(i, k));
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::optional<Rational> gap;
  for (std::size_t k = 1; k < values.size(); ++k) {
    Rational g = values[k] - values[k - 1];
    if (!gap || g < *gap) gap = g;
  }
  return gap ? Rational(*gap / 1000) : Rational(1, 1000);
}

}  // namespace tropical
