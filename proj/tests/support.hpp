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

// Random instance generators and independent oracles shared by the unit tests
// and the acceptance binary. Nothing here calls into the library's own
// enumeration, volume or flip code; the oracles are separate derivations of
// the same quantities.

#ifndef TROPICAL_TESTS_SUPPORT_HPP_
#define TROPICAL_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropical/core.hpp"

namespace tropical::testing {

using Rng = std::mt19937_64;

// Uniform rational with a denominator drawn from [1, max_den] and value in
// [-span, span].
Rational RandomRational(Rng& rng, int max_den = 100, int span = 3);

Arrangement RandomArrangement(Rng& rng, std::size_t n, int d, int max_den = 100);

// Redraws until the arrangement is generic.
Arrangement RandomGenericArrangement(Rng& rng, std::size_t n, int d);

// A non-generic arrangement in the tropical plane (d = 3) built from a
// generic base: apex `moved` is placed on a ray of hyperplane `host` (when
// `coincide` is false) or onto the apex of `host`.
struct NonGenericInstance {
  Arrangement arrangement;
  std::size_t moved = 0;
  std::size_t host = 0;
  bool coincide = false;
};
NonGenericInstance RandomNonGeneric(Rng& rng, std::size_t n, bool coincide);

// ---------------------------------------------------------------------------
// Oracles.

// Direct argmax of x_j - v_ij.
std::vector<Subset> NaiveType(const RationalMatrix& apexes,
                              const RationalVector& x);

// Fubini numbers by the recursion F(d) = sum_k binom(d, k) F(d - k).
std::uint64_t FubiniNumber(int d);

std::uint64_t Binomial(int n, int k);

// Affine dimension of conv{e_i × e_j : (i, j) in edges} from the rank of the
// vertex coordinates, computed in floating point on the 0/1 matrix.
int VertexRankDim(const CellGraph& graph);

// Normalized volume of the edge polytope of a connected bipartite graph as
// the number of nonnegative integer vectors (a_1..a_n) with sum d - 1 and
// sum_{i in S} a_i < |N(S)| for every nonempty S ⊆ [n].
std::uint64_t DraconianCount(const CellGraph& graph);

// (deg(1) - 1, ..., deg(n) - 1) of a left-node degree sequence.
std::vector<int> LeftDegreeVector(const CellGraph& tree);

// All compositions of `total` into `parts` nonnegative parts.
std::set<std::vector<int>> Compositions(int total, int parts);

// Staircase triangulation of Δ_1 × Δ_{d-1} for a permutation of [d]: trees
// T_m with row 1 = {π(1..m)}, row 2 = {π(m..d)}, m = 1..d.
std::vector<CellGraph> StaircaseTriangulation(const std::vector<int>& perm);

// Points near every tree-solution x_j = v_ij + c_i (one per spanning tree of
// K_{n,d}) with small random offsets, plus uniform points in a box.
std::vector<RationalVector> SamplePoints(const RationalMatrix& apexes,
                                         std::size_t count, Rng& rng);

}  // namespace tropical::testing

#endif  // TROPICAL_TESTS_SUPPORT_HPP_
