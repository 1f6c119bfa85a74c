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

// Types of points in a max-plus hyperplane arrangement.
//
// The type of x records, for each hyperplane i, the set of coordinates j
// maximizing x_j - v_ij. A candidate type is realizable iff the system
//
//   x_j - x_k  = v_ij - v_ik   for j, k in A_i
//   x_k - x_j  < v_ik - v_ij   for j in A_i, k not in A_i
//
// has a solution. Every constraint bounds a difference of two coordinates,
// so feasibility reduces to negative-cycle detection in a constraint graph
// whose weights are a + b·ε with ε a positive infinitesimal standing in for
// the strict inequalities. Everything is exact.

#ifndef TROPICAL_GEOMETRY_HPP_
#define TROPICAL_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tropical/core.hpp"

namespace tropical {

using TypeSet = std::set<TypeVector>;

struct RealizationResult {
  bool realizable = false;
  std::optional<ProjectivePoint> witness;  // normalized
  // Affine dimension of the realization set in TP^{d-1}.
  std::optional<int> dimension;
};

// Per-apex genericity data.
struct ApexReport {
  std::size_t index = 0;
  int total = 0;
  // Positions l != index whose entry in the apex type has >= 2 elements,
  // i.e. hyperplanes whose fan has a proper face through this apex.
  std::vector<std::size_t> offending;
  bool generic() const { return offending.empty(); }
};

struct GenericityReport {
  bool generic = true;
  int bound = 0;  // n + d - 1
  std::vector<ApexReport> apexes;
};

// Upper bound on (2^d - 1)^n candidate types considered by EnumerateTypes.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1u << 20;

TypeVector TypeOfPoint(const Arrangement& arr, const ProjectivePoint& x);

TypeVector ApexType(const Arrangement& arr, std::size_t i);

GenericityReport CheckGenericity(const Arrangement& arr);
bool IsGeneric(const Arrangement& arr);

RealizationResult Realize(const Arrangement& arr, const TypeVector& type);

// Number of candidate types, saturating at UINT64_MAX.
std::uint64_t CandidateCount(std::size_t n, int d);

// All realizable types. Throws kResourceLimit if CandidateCount exceeds
// `budget`.
TypeSet EnumerateTypes(const Arrangement& arr,
                       std::uint64_t budget = kDefaultEnumerationBudget);

// Entry i becomes A_i ∩ P_m for the first block P_m meeting A_i.
TypeVector Refine(const TypeVector& type, const OrderedPartition& partition);

// Replaces apex i by normalize(v_i + delta).
Arrangement Perturb(const Arrangement& arr, std::size_t i,
                    const RationalVector& delta);

// A perturbation radius that cannot change any strict comparison between
// apex coordinate differences: 1/1000 of the smallest nonzero gap among the
// values v_ij - v_ik (and 0). Falls back to 1/1000 when all gaps vanish.
Rational SafeRadius(const Arrangement& arr);

}  // namespace tropical

#endif  // TROPICAL_GEOMETRY_HPP_
