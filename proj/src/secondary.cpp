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

#include "tropical/secondary.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "linalg.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

// Denominator of the random perturbation grid inside the safe radius.
constexpr long kPerturbationSteps = 1000;

CellGraph UnionOf(const std::vector<CellGraph>& cells, std::size_t n, int d) {
  std::vector<Subset> rows(n, 0);
  for (const auto& cell : cells) {
    for (std::size_t i = 0; i < n; ++i) rows[i] |= cell.row(i);
  }
  return CellGraph(n, d, std::move(rows));
}

// A cycle of K_{n,d} as its edges in cycle order. Alternate edges form the
// two halves Z+ and Z- of the circuit the cycle's vertices span; the two
// triangulations of that circuit drop one edge of Z+ (respectively Z-) from
// the cycle.
using Cycle = std::vector<std::pair<std::size_t, int>>;

// Simple cycles of the bipartite graph `g`, each listed once. Nodes are
// 0..n-1 on the left and n..n+d-1 on the right; every cycle starts at its
// smallest node and is kept in one direction only.
std::vector<Cycle> SimpleCycles(const CellGraph& g) {
  const std::size_t n = g.n();
  const int nodes = static_cast<int>(n) + g.d();
  auto adjacent = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return a < static_cast<int>(n) && b >= static_cast<int>(n) &&
           g.HasEdge(a, b - static_cast<int>(n) + 1);
  };
  auto edge = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return std::make_pair(static_cast<std::size_t>(a), b - static_cast<int>(n) + 1);
  };
  std::vector<Cycle> cycles;
  std::vector<int> path;
  std::vector<bool> used(nodes, false);
  auto extend = [&](auto&& self, int start) -> void {
    const int last = path.back();
    for (int next = start; next < nodes; ++next) {
      if (!adjacent(last, next)) continue;
      if (next == start && path.size() >= 4 && path[1] < last) {
        Cycle cycle;
        for (std::size_t k = 0; k < path.size(); ++k) {
          cycle.push_back(edge(path[k], path[(k + 1) % path.size()]));
        }
        cycles.push_back(std::move(cycle));
      }
      if (next == start || used[next]) continue;
      used[next] = true;
      path.push_back(next);
      self(self, start);
      path.pop_back();
      used[next] = false;
    }
  };
  for (int start = 0; start < nodes; ++start) {
    used[start] = true;
    path = {start};
    extend(extend, start);
    used[start] = false;
  }
  return cycles;
}

// Whether `cells` is exactly {link ∪ (cycle minus e) : link in links,
// e in the half of the cycle with the given parity}; fills `links`.
bool CircuitSide(const std::vector<CellGraph>& cells, const Cycle& cycle,
                 std::size_t parity, std::set<CellGraph>& links) {
  const std::size_t n = cells.front().n();
  const int d = cells.front().d();
  CellGraph whole(n, d);
  for (auto [i, j] : cycle) whole.AddEdge(i, j);
  std::set<CellGraph> seen;
  for (const auto& cell : cells) {
    std::size_t missing_at = cycle.size();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (!cell.HasEdge(cycle[k].first, cycle[k].second)) {
        if (missing_at != cycle.size()) return false;
        missing_at = k;
      }
    }
    if (missing_at == cycle.size() || missing_at % 2 != parity) return false;
    CellGraph link = cell;
    for (auto [i, j] : cycle) link.RemoveEdge(i, j);
    links.insert(link);
    seen.insert(cell);
  }
  return seen.size() == links.size() * (cycle.size() / 2);
}

void InsertIfTriangulation(const Arrangement& arr, std::uint64_t budget,
                           std::set<Subdivision>& out) {
  if (!IsGeneric(arr)) return;
  Subdivision sub = DualSubdivision(arr, budget);
  if (IsTriangulation(sub)) out.insert(std::move(sub));
}

}  // namespace

std::int64_t GkzVector::Sum() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

bool Refines(const Subdivision& fine, const Subdivision& coarse) {
  if (fine.n != coarse.n || fine.d != coarse.d) return false;
  std::vector<std::int64_t> filled(coarse.maximal_cells.size(), 0);
  for (const auto& cell : fine.maximal_cells) {
    auto host = std::find_if(
        coarse.maximal_cells.begin(), coarse.maximal_cells.end(),
        [&](const CellGraph& c) { return cell.IsSubgraphOf(c); });
    if (host == coarse.maximal_cells.end()) return false;
    filled[host - coarse.maximal_cells.begin()] += NormalizedVolume(cell);
  }
  for (std::size_t c = 0; c < coarse.maximal_cells.size(); ++c) {
    if (filled[c] != NormalizedVolume(coarse.maximal_cells[c])) return false;
  }
  return true;
}

std::vector<Subdivision> RefiningTriangulations(const Arrangement& arr,
                                                int samples, std::uint64_t seed,
                                                std::uint64_t budget) {
  const std::size_t n = arr.n();
  const int d = arr.d();
  if (samples < static_cast<int>(2 * n) * d) {
    throw Error(ErrorCode::kInvalidArgument,
                "refining triangulations need at least 2·n·d = " +
                    std::to_string(2 * n * d) + " samples");
  }
  const Rational radius = SafeRadius(arr);
  std::set<Subdivision> found;

  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      for (int sign : {1, -1}) {
        RationalVector delta(d);
        delta[k] = radius * sign;
        InsertIfTriangulation(Perturb(arr, i, delta), budget, found);
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> step(-kPerturbationSteps,
                                           kPerturbationSteps);
  for (int s = 0; s < samples; ++s) {
    std::vector<ProjectivePoint> apexes;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector moved = arr.apex(i).coords();
      for (int j = 0; j < d; ++j) {
        Rational fraction(step(rng), kPerturbationSteps);
        fraction.canonicalize();
        moved[j] += radius * fraction;
      }
      apexes.emplace_back(std::move(moved));
    }
    InsertIfTriangulation(Arrangement(std::move(apexes)), budget, found);
  }
  return {found.begin(), found.end()};
}

GkzVector ComputeGkzVector(const Subdivision& t) {
  if (!IsTriangulation(t)) {
    throw Error(ErrorCode::kInvalidArgument,
                "GKZ vectors are defined for triangulations only");
  }
  GkzVector gkz{t.n, t.d, std::vector<std::int64_t>(t.n * t.d, 0)};
  for (const auto& simplex : t.maximal_cells) {
    const std::int64_t volume = NormalizedVolume(simplex);
    for (auto [i, j] : simplex.Edges()) {
      gkz.entries[(i - 1) * t.d + (j - 1)] += volume;
    }
  }
  return gkz;
}

int AffineHullDimension(const std::vector<GkzVector>& vectors) {
  if (vectors.empty()) return -1;
  RationalMatrix rows;
  for (std::size_t k = 1; k < vectors.size(); ++k) {
    RationalVector row;
    for (std::size_t c = 0; c < vectors[k].entries.size(); ++c) {
      row.emplace_back(static_cast<long>(vectors[k].entries[c] -
                                         vectors[0].entries[c]));
    }
    rows.push_back(std::move(row));
  }
  return linalg::Rank(std::move(rows));
}

bool AllTriangulationsRegular(std::size_t n, int d) {
  if (n <= 2 || d <= 2) return true;
  const std::pair<std::size_t, int> key{n, d};
  static const std::pair<std::size_t, int> kListed[] = {
      {3, 3}, {4, 3}, {5, 3}, {3, 4}, {3, 5}};
  return std::find(std::begin(kListed), std::end(kListed), key) !=
         std::end(kListed);
}

NonGenericFaceVerdict CheckNonGenericFace(const Arrangement& arr, int samples,
                                    std::uint64_t seed, std::uint64_t budget) {
  if (IsGeneric(arr)) {
    throw Error(ErrorCode::kPrecondition,
                "face check needs a non-generic arrangement");
  }
  NonGenericFaceVerdict verdict;
  verdict.subdivision = DualSubdivision(arr, budget);
  verdict.subdivision_is_triangulation = IsTriangulation(verdict.subdivision);
  verdict.triangulations = RefiningTriangulations(arr, samples, seed, budget);
  verdict.all_refine = std::all_of(
      verdict.triangulations.begin(), verdict.triangulations.end(),
      [&](const Subdivision& t) { return Refines(t, verdict.subdivision); });
  for (const auto& t : verdict.triangulations) {
    verdict.gkz.push_back(ComputeGkzVector(t));
  }
  verdict.face_dimension = AffineHullDimension(verdict.gkz);
  verdict.asserted = AllTriangulationsRegular(arr.n(), arr.d());
  verdict.holds = !verdict.subdivision_is_triangulation &&
                  verdict.triangulations.size() >= 2 && verdict.all_refine &&
                  verdict.face_dimension >= 1;
  return verdict;
}

bool FlipRelated(const Subdivision& t1, const Subdivision& t2) {
  if (t1.n != t2.n || t1.d != t2.d) {
    throw Error(ErrorCode::kInvalidArgument,
                "flip check needs subdivisions of the same product");
  }
  if (t1 == t2) return false;
  std::vector<CellGraph> only1, only2, common;
  std::set_difference(t1.maximal_cells.begin(), t1.maximal_cells.end(),
                      t2.maximal_cells.begin(), t2.maximal_cells.end(),
                      std::back_inserter(only1));
  std::set_difference(t2.maximal_cells.begin(), t2.maximal_cells.end(),
                      t1.maximal_cells.begin(), t1.maximal_cells.end(),
                      std::back_inserter(only2));
  std::set_intersection(t1.maximal_cells.begin(), t1.maximal_cells.end(),
                        t2.maximal_cells.begin(), t2.maximal_cells.end(),
                        std::back_inserter(common));
  if (only1.empty() || only2.empty()) return false;

  // A flip swaps the two triangulations of one circuit, joined with the same
  // set of link faces on both sides. Circuits of the product are the cycles
  // of K_{n,d}.
  for (const Cycle& cycle : SimpleCycles(UnionOf(only1, t1.n, t1.d))) {
    for (std::size_t parity : {0u, 1u}) {
      std::set<CellGraph> links1, links2;
      if (CircuitSide(only1, cycle, parity, links1) &&
          CircuitSide(only2, cycle, 1 - parity, links2) && links1 == links2) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace tropical
