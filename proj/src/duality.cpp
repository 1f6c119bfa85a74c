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

#include "tropical/duality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "linalg.hpp"
#include "tropical/axioms.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

// Union-find over the n + d nodes; right node j (1-based) is n + j - 1.
class NodeForest {
 public:
  explicit NodeForest(std::size_t nodes) : parent_(nodes) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Potentials (a, b) with a_i + b_j = w_ij on the edges of a spanning tree,
// a_0 = 0.
std::pair<RationalVector, RationalVector> TreePotentials(
    const CellGraph& tree, const std::function<Rational(std::size_t, int)>& w) {
  const std::size_t n = tree.n();
  const int d = tree.d();
  RationalVector a(n), b(d);
  std::vector<bool> left_done(n, false), right_done(d, false);
  left_done[0] = true;
  std::vector<std::pair<bool, std::size_t>> queue{{true, 0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [is_left, node] = queue[head];
    if (is_left) {
      for (int j : SubsetLabels(tree.row(node))) {
        if (right_done[j - 1]) continue;
        b[j - 1] = w(node, j) - a[node];
        right_done[j - 1] = true;
        queue.push_back({false, static_cast<std::size_t>(j - 1)});
      }
    } else {
      const int j = static_cast<int>(node) + 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (left_done[i] || !tree.HasEdge(i, j)) continue;
        a[i] = w(i, j) - b[node];
        left_done[i] = true;
        queue.push_back({true, i});
      }
    }
  }
  return {std::move(a), std::move(b)};
}

RationalVector ChartVertex(std::size_t i, int j, std::size_t n, int d) {
  RationalVector v(n - 1 + d - 1);
  if (i + 1 < n) v[i] = 1;
  if (j < d) v[n - 1 + (j - 1)] = 1;
  return v;
}

Rational SimplexVolume(const CellGraph& tree) {
  const std::size_t n = tree.n();
  const int d = tree.d();
  auto edges = tree.Edges();
  RationalVector origin = ChartVertex(edges[0].first - 1, edges[0].second, n, d);
  RationalMatrix rows;
  for (std::size_t e = 1; e < edges.size(); ++e) {
    RationalVector v = ChartVertex(edges[e].first - 1, edges[e].second, n, d);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= origin[c];
    rows.push_back(std::move(v));
  }
  Rational det = linalg::Determinant(std::move(rows));
  return abs(det);
}

}  // namespace

Subdivision MakeSubdivision(std::size_t n, int d, std::vector<CellGraph> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return Subdivision{n, d, std::move(cells)};
}

CellGraph TypeToGraph(const TypeVector& type, int d) {
  return CellGraph(type.size(), d, type.entries());
}

int CellDim(const CellGraph& graph) {
  if (graph.Empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cell graph has no edges");
  }
  const std::size_t n = graph.n();
  const int d = graph.d();
  NodeForest forest(n + d);
  std::vector<bool> used(n + d, false);
  int components = 0;
  for (auto [i, j] : graph.Edges()) {
    std::size_t left = i - 1, right = n + j - 1;
    for (std::size_t node : {left, right}) {
      if (!used[node]) {
        used[node] = true;
        ++components;
      }
    }
    if (forest.Union(left, right)) --components;
  }
  const int nodes = static_cast<int>(std::count(used.begin(), used.end(), true));
  return nodes - components - 1;
}

bool IsSpanningTree(const CellGraph& graph) {
  const int nodes = static_cast<int>(graph.n()) + graph.d();
  return graph.EdgeCount() == nodes - 1 && CellDim(graph) == nodes - 2;
}

void ForEachSpanningTree(const CellGraph& graph,
                         const std::function<void(const CellGraph&)>& visit) {
  const std::size_t n = graph.n();
  const int d = graph.d();
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.row(i) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "graph has an isolated left node");
    }
  }
  const auto edges = graph.Edges();
  const std::size_t needed = n + d - 1;
  CellGraph tree(n, d);

  std::function<void(std::size_t, std::size_t, NodeForest)> extend =
      [&](std::size_t next, std::size_t chosen, NodeForest forest) {
        if (chosen == needed) {
          visit(tree);
          return;
        }
        if (edges.size() - next < needed - chosen) return;
        auto [i, j] = edges[next];
        NodeForest with = forest;
        if (with.Union(i - 1, n + j - 1)) {
          tree.AddEdge(i - 1, j);
          extend(next + 1, chosen + 1, std::move(with));
          tree.RemoveEdge(i - 1, j);
        }
        extend(next + 1, chosen, std::move(forest));
      };
  extend(0, 0, NodeForest(n + d));
}

int ArrangementCellDim(const Arrangement& arr, const TypeVector& type) {
  RealizationResult r = Realize(arr, type);
  if (!r.realizable) {
    throw Error(ErrorCode::kNotACell,
                "type " + type.ToString() + " is not realized by the arrangement");
  }
  return *r.dimension;
}

Subdivision DualSubdivision(const Arrangement& arr, std::uint64_t budget) {
  return DualSubdivision(arr, EnumerateTypes(arr, budget));
}

Subdivision DualSubdivision(const Arrangement& arr, const TypeSet& types) {
  std::vector<CellGraph> cells;
  for (const auto& type : types) {
    if (ArrangementCellDim(arr, type) == 0) {
      cells.push_back(TypeToGraph(type, arr.d()));
    }
  }
  return MakeSubdivision(arr.n(), arr.d(), std::move(cells));
}

Subdivision RegularSubdivision(const RationalMatrix& weights) {
  if (weights.empty() || weights[0].empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty weight matrix");
  }
  const std::size_t n = weights.size();
  const int d = static_cast<int>(weights[0].size());
  if (d > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument, "weight matrix too wide");
  }
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != d) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged weight matrix");
    }
  }
  auto w = [&](std::size_t i, int j) { return weights[i][j - 1]; };

  std::set<CellGraph> cells;
  ForEachSpanningTree(CompleteGraph(n, d), [&](const CellGraph& tree) {
    auto [a, b] = TreePotentials(tree, w);
    CellGraph cell(n, d);
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 1; j <= d; ++j) {
        Rational height = a[i] + b[j - 1];
        if (height > weights[i][j - 1]) return;  // not a lower facet
        if (height == weights[i][j - 1]) cell.AddEdge(i, j);
      }
    }
    cells.insert(std::move(cell));
  });
  return MakeSubdivision(n, d, {cells.begin(), cells.end()});
}

std::int64_t NormalizedVolume(const CellGraph& graph) {
  const std::size_t n = graph.n();
  const int d = graph.d();
  const int full = static_cast<int>(n) + d - 2;
  if (graph.Empty() || CellDim(graph) != full) {
    throw Error(ErrorCode::kInvalidArgument,
                "normalized volume needs a full-dimensional cell, got " +
                    graph.ToString());
  }
  // Placing heights 2^(edge rank): any tie on a non-tree edge would equate a
  // power of two with a signed sum of other distinct powers, impossible by
  // 2-adic valuation, so every lower facet is a simplex.
  auto h = [&](std::size_t i, int j) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, i * d + (j - 1));
    return Rational(p);
  };
  Rational total = 0;
  ForEachSpanningTree(graph, [&](const CellGraph& tree) {
    auto [a, b] = TreePotentials(tree, h);
    for (auto [i, j] : graph.Edges()) {
      if (tree.HasEdge(i - 1, j)) continue;
      Rational height = a[i - 1] + b[j - 1];
      if (height >= h(i - 1, j)) return;
    }
    total += SimplexVolume(tree);
  });
  if (total.get_den() != 1) {
    throw Error(ErrorCode::kConsistency, "non-integral normalized volume");
  }
  return total.get_num().get_si();
}

std::int64_t ProductVolume(std::size_t n, int d) {
  // binomial(n + d - 2, n - 1)
  const std::int64_t top = static_cast<std::int64_t>(n) + d - 2;
  const std::int64_t k = static_cast<std::int64_t>(n) - 1;
  std::int64_t result = 1;
  for (std::int64_t r = 1; r <= k; ++r) result = result * (top - k + r) / r;
  return result;
}

bool IsTriangulation(const Subdivision& sub) {
  for (const auto& cell : sub.maximal_cells) {
    if (!IsSpanningTree(cell)) return false;
  }
  return static_cast<std::int64_t>(sub.maximal_cells.size()) ==
         ProductVolume(sub.n, sub.d);
}

CorrespondenceVerdict CheckCorrespondence(const Arrangement& arr,
                                          std::uint64_t budget) {
  CorrespondenceVerdict verdict;
  verdict.generic = IsGeneric(arr);
  TypeSet types = EnumerateTypes(arr, budget);
  verdict.type_count = types.size();
  AxiomReport axioms = CheckTropicalOrientedMatroid(types, arr.n(), arr.d());
  verdict.is_tom = axioms.is_tom;
  verdict.local_refinement = axioms.local_refinement.pass;
  verdict.subdivision = DualSubdivision(arr, types);
  verdict.triangulation = IsTriangulation(verdict.subdivision);
  verdict.non_apex_degeneracy = verdict.generic && !verdict.triangulation;
  const bool triangulation_ok =
      !verdict.triangulation ||
      (verdict.generic && verdict.is_tom && verdict.local_refinement);
  const bool non_generic_ok = verdict.generic || !verdict.local_refinement;
  verdict.consistent = triangulation_ok && non_generic_ok;
  return verdict;
}

}  // namespace tropical
