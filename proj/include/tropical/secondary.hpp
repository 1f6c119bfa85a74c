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

// Secondary-polytope bookkeeping for non-generic arrangements.
//
// A non-generic arrangement sits between generic ones. Its dual subdivision
// is refined by the triangulations of nearby generic arrangements, found by
// moving apexes within SafeRadius. The GKZ vectors of those triangulations
// span a face of the secondary polytope of Δ_{n-1} × Δ_{d-1}; its affine
// dimension is the number of independent flips the arrangement leaves open.

#ifndef TROPICAL_SECONDARY_HPP_
#define TROPICAL_SECONDARY_HPP_

#include <cstdint>
#include <vector>

#include "tropical/duality.hpp"

namespace tropical {

struct GkzVector {
  std::size_t n = 0;
  int d = 0;
  std::vector<std::int64_t> entries;  // row-major, entry (i, j) at i * d + j - 1

  std::int64_t at(std::size_t i, int j) const { return entries[i * d + j - 1]; }
  std::int64_t Sum() const;

  friend bool operator==(const GkzVector&, const GkzVector&) = default;
  friend auto operator<=>(const GkzVector&, const GkzVector&) = default;
};

// Each fine cell lies inside some coarse cell and, per coarse cell, the fine
// volumes add up to the coarse volume.
bool Refines(const Subdivision& fine, const Subdivision& coarse);

// Distinct triangulations of generic arrangements within SafeRadius of
// `arr`: every apex moved by ± the radius along each coordinate, then
// `samples` random moves of all apexes at once. Non-generic perturbations are
// skipped. Throws kInvalidArgument when samples < 2·n·d.
std::vector<Subdivision> RefiningTriangulations(
    const Arrangement& arr, int samples, std::uint64_t seed = 0,
    std::uint64_t budget = kDefaultEnumerationBudget);

// Throws kInvalidArgument unless IsTriangulation(t).
GkzVector ComputeGkzVector(const Subdivision& t);

// Affine dimension of the convex hull of the given vectors.
int AffineHullDimension(const std::vector<GkzVector>& vectors);

// True for (n, d) where every triangulation of Δ_{n-1} × Δ_{d-1} is regular:
// a one-dimensional factor, or Δ2×Δ2, Δ3×Δ2, Δ4×Δ2, Δ2×Δ3, Δ2×Δ4.
bool AllTriangulationsRegular(std::size_t n, int d);

struct NonGenericFaceVerdict {
  Subdivision subdivision;
  bool subdivision_is_triangulation = false;
  std::vector<Subdivision> triangulations;
  std::vector<GkzVector> gkz;
  bool all_refine = false;
  int face_dimension = -1;
  // Whether the positive-dimensional-face claim is asserted for this (n, d).
  bool asserted = false;
  // ¬triangulation ∧ |triangulations| >= 2 ∧ all_refine ∧ face_dimension >= 1
  bool holds = false;
};

// Throws kPrecondition on a generic arrangement.
NonGenericFaceVerdict CheckNonGenericFace(
    const Arrangement& arr, int samples, std::uint64_t seed = 0,
    std::uint64_t budget = kDefaultEnumerationBudget);

// True when t2 arises from t1 by one bistellar flip: for some cycle C of
// K_{n,d} with alternate edge classes Z+ and Z-, and some set L of link
// faces, t1 \ t2 = {l ∪ (C - e) : l in L, e in Z+} and t2 \ t1 is the same
// with Z-. Throws kInvalidArgument for mismatched (n, d).
bool FlipRelated(const Subdivision& t1, const Subdivision& t2);

}  // namespace tropical

#endif  // TROPICAL_SECONDARY_HPP_
