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

// Tropical oriented matroid axioms over a collection of (n, d)-types.
//
// Comparability graph. For types A and B and each position i, every j in A_i
// and k in B_i with j != k contribute an edge between j and k. If both j and
// k lie in A_i ∩ B_i the edge is undirected, otherwise it is directed j -> k.
// For points x (type A) and y (type B) a directed edge j -> k certifies
// x_j - x_k > y_j - y_k (j maximizes x - v_i, k maximizes y - v_i, and one of
// the comparisons is strict); an undirected edge certifies equality. A cycle
// through at least one directed edge would therefore chain to a strict
// inequality 0 > 0, so realizable collections are acyclic in that sense.
// Undirected cycles are allowed.
//
// Every check reports the first counterexample in canonical order (types
// sorted lexicographically, then positions, then labels).

#ifndef TROPICAL_AXIOMS_HPP_
#define TROPICAL_AXIOMS_HPP_

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tropical/core.hpp"
#include "tropical/geometry.hpp"

namespace tropical {

class ComparabilityGraph {
 public:
  explicit ComparabilityGraph(int d);

  int d() const { return d_; }
  // Unordered pairs (j, k) with j < k, 1-based.
  const std::set<std::pair<int, int>>& undirected() const { return undirected_; }
  // Ordered pairs (from, to), 1-based.
  const std::set<std::pair<int, int>>& directed() const { return directed_; }

  void AddUndirected(int j, int k);
  void AddDirected(int from, int to);

  friend bool operator==(const ComparabilityGraph&,
                         const ComparabilityGraph&) = default;

 private:
  int d_;
  std::set<std::pair<int, int>> undirected_;
  std::set<std::pair<int, int>> directed_;
};

ComparabilityGraph BuildComparabilityGraph(const TypeVector& a,
                                           const TypeVector& b, int d);

// No cycle that uses a directed edge forwards, undirected edges being
// traversable both ways.
bool IsAcyclic(const ComparabilityGraph& graph);

struct BoundaryResult {
  bool pass = true;
  std::vector<int> missing;  // labels j whose constant type is absent
};

struct EliminationFailure {
  TypeVector a, b;
  std::size_t position;
};
struct EliminationResult {
  bool pass = true;
  std::optional<EliminationFailure> failure;
};

struct ComparabilityResult {
  bool pass = true;
  std::optional<std::pair<TypeVector, TypeVector>> failure;
};

struct SurroundingFailure {
  TypeVector type;
  OrderedPartition partition;
  TypeVector refinement;
};
struct SurroundingResult {
  bool pass = true;
  std::optional<SurroundingFailure> failure;
};

struct LocalRefinementFailure {
  TypeVector type;
  std::size_t position;
  int label;
  friend bool operator==(const LocalRefinementFailure&,
                         const LocalRefinementFailure&) = default;
};
struct LocalRefinementResult {
  bool pass = true;
  std::optional<LocalRefinementFailure> failure;
};

struct AxiomReport {
  BoundaryResult boundary;
  EliminationResult elimination;
  ComparabilityResult comparability;
  SurroundingResult surrounding;
  // Reported alongside, never part of is_tom.
  LocalRefinementResult local_refinement;
  bool is_tom = false;
};

BoundaryResult CheckBoundary(const TypeSet& types, std::size_t n, int d);
EliminationResult CheckElimination(const TypeSet& types);
ComparabilityResult CheckComparability(const TypeSet& types, int d);
// Throws kResourceLimit for d above kMaxSurroundingDimension.
SurroundingResult CheckSurrounding(const TypeSet& types, int d);
LocalRefinementResult CheckLocalRefinement(const TypeSet& types);

// Every (T, i, k) with |T_i| >= 2, k in T_i and T with T_i := {k} absent.
std::vector<LocalRefinementFailure> LocalRefinementFailures(
    const TypeSet& types);

inline constexpr int kMaxSurroundingDimension = 7;

AxiomReport CheckTropicalOrientedMatroid(const TypeSet& types, std::size_t n,
                                         int d);

}  // namespace tropical

#endif  // TROPICAL_AXIOMS_HPP_
