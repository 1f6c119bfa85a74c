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

// Subdivisions of Δ_{n-1} × Δ_{d-1} dual to a hyperplane arrangement.
//
// A type T maps to the bipartite graph with edges (i, j), j in T_i, which
// names the face of the product spanned by the vertices e_i × e_j. Two paths
// lead to the same subdivision:
//
//   * DualSubdivision keeps the graphs of the 0-dimensional arrangement
//     cells, found by type enumeration.
//   * RegularSubdivision lifts vertex (i, j) to height w_ij and reads off the
//     lower envelope. Affine functions on the product restrict to vertices as
//     a_i + b_j, so each envelope facet is found from a spanning tree of
//     K_{n,d} (a full-dimensional simplex): solve a_i + b_j = w_ij on the
//     tree and keep it when a_i + b_j <= w_ij everywhere.
//
// With w = v (the apex matrix) the two agree: a point x of type T satisfies
// x_j - m_i <= v_ij with equality exactly on the edges of T, where
// m_i = max_j (x_j - v_ij). That is the lower-envelope orientation.

#ifndef TROPICAL_DUALITY_HPP_
#define TROPICAL_DUALITY_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "tropical/core.hpp"
#include "tropical/geometry.hpp"

namespace tropical {

struct Subdivision {
  std::size_t n = 0;
  int d = 0;
  std::vector<CellGraph> maximal_cells;  // sorted, unique

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
  friend bool operator<(const Subdivision& a, const Subdivision& b) {
    return a.maximal_cells < b.maximal_cells;
  }
};

// Builds a Subdivision with canonically ordered, deduplicated cells.
Subdivision MakeSubdivision(std::size_t n, int d, std::vector<CellGraph> cells);

CellGraph TypeToGraph(const TypeVector& type, int d);

// (#nodes of positive degree) - (#components of the support) - 1. Throws
// kInvalidArgument for a graph without edges.
int CellDim(const CellGraph& graph);

bool IsSpanningTree(const CellGraph& graph);

// Calls `visit` with every spanning tree of the connected graph `graph`
// (every node must have positive degree).
void ForEachSpanningTree(const CellGraph& graph,
                         const std::function<void(const CellGraph&)>& visit);

// Throws kNotACell when `type` is not realizable.
int ArrangementCellDim(const Arrangement& arr, const TypeVector& type);

Subdivision DualSubdivision(const Arrangement& arr,
                            std::uint64_t budget = kDefaultEnumerationBudget);
// Same, from an already enumerated type set of `arr`.
Subdivision DualSubdivision(const Arrangement& arr, const TypeSet& types);

// Lower-envelope subdivision for an n × d height matrix.
Subdivision RegularSubdivision(const RationalMatrix& weights);

// Normalized lattice volume of the face spanned by the edges of `graph`.
// Throws kInvalidArgument unless CellDim(graph) == n + d - 2.
std::int64_t NormalizedVolume(const CellGraph& graph);

// binomial(n + d - 2, n - 1), the normalized volume of Δ_{n-1} × Δ_{d-1}.
std::int64_t ProductVolume(std::size_t n, int d);

bool IsTriangulation(const Subdivision& sub);

struct CorrespondenceVerdict {
  bool generic = false;
  bool is_tom = false;
  bool triangulation = false;
  bool local_refinement = false;
  std::size_t type_count = 0;
  Subdivision subdivision;
  // Apex-generic, yet some vertex of the arrangement lies on three or more
  // hyperplanes in a cycle (for instance three tropical lines through one
  // point away from their apexes). The subdivision is then not a
  // triangulation even though no apex sits on another hyperplane.
  bool non_apex_degeneracy = false;
  // triangulation ⇒ (generic ∧ is_tom ∧ local_refinement) and
  // non-generic ⇒ ¬local_refinement. Non-generic ⇒ ¬triangulation follows.
  bool consistent = false;
};

CorrespondenceVerdict CheckCorrespondence(
    const Arrangement& arr, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace tropical

#endif  // TROPICAL_DUALITY_HPP_
