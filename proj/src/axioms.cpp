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

#include "tropical/axioms.hpp"

#include <algorithm>
#include <functional>

#include "tropical/error.hpp"

namespace tropical {

ComparabilityGraph::ComparabilityGraph(int d) : d_(d) {}

void ComparabilityGraph::AddUndirected(int j, int k) {
  if (j == k) return;
  auto key = std::minmax(j, k);
  if (directed_.count({j, k}) || directed_.count({k, j})) return;
  undirected_.insert({key.first, key.second});
}

void ComparabilityGraph::AddDirected(int from, int to) {
  if (from == to) return;
  auto key = std::minmax(from, to);
  undirected_.erase({key.first, key.second});
  directed_.insert({from, to});
}

ComparabilityGraph BuildComparabilityGraph(const TypeVector& a,
                                           const TypeVector& b, int d) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "comparability graph needs types of equal length");
  }
  ComparabilityGraph graph(d);
  std::vector<std::pair<int, int>> undirected;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Subset common = a[i] & b[i];
    for (int j : SubsetLabels(a[i])) {
      for (int k : SubsetLabels(b[i])) {
        if (j == k) continue;
        if (Contains(common, j) && Contains(common, k)) {
          undirected.emplace_back(j, k);
        } else {
          graph.AddDirected(j, k);
        }
      }
    }
  }
  // Added last so that a directed contribution from any position wins.
  for (auto [j, k] : undirected) graph.AddUndirected(j, k);
  return graph;
}

bool IsAcyclic(const ComparabilityGraph& graph) {
  const int d = graph.d();
  std::vector<std::vector<int>> adjacency(d + 1);
  for (auto [j, k] : graph.directed()) adjacency[j].push_back(k);
  for (auto [j, k] : graph.undirected()) {
    adjacency[j].push_back(k);
    adjacency[k].push_back(j);
  }

  // Tarjan's strongly connected components.
  std::vector<int> index(d + 1, -1), low(d + 1, 0), component(d + 1, -1);
  std::vector<bool> on_stack(d + 1, false);
  std::vector<int> stack;
  int counter = 0;
  int components = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adjacency[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (int v = 1; v <= d; ++v) {
    if (index[v] < 0) visit(v);
  }

  for (auto [j, k] : graph.directed()) {
    if (component[j] == component[k]) return false;
  }
  return true;
}

BoundaryResult CheckBoundary(const TypeSet& types, std::size_t n, int d) {
  BoundaryResult result;
  for (int j = 1; j <= d; ++j) {
    TypeVector constant(std::vector<Subset>(n, Singleton(j)));
    if (!types.count(constant)) {
      result.pass = false;
      result.missing.push_back(j);
    }
  }
  return result;
}

namespace {

// Searches for C with C_j = A_j ∪ B_j and C_k in {A_k, B_k, A_k ∪ B_k}.
bool HasEliminationWitness(const TypeSet& types, const TypeVector& a,
                           const TypeVector& b, std::size_t j) {
  const std::size_t n = a.size();
  std::vector<std::vector<Subset>> options(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) {
      options[k] = {static_cast<Subset>(a[k] | b[k])};
    } else {
      options[k] = {a[k], b[k], static_cast<Subset>(a[k] | b[k])};
      std::sort(options[k].begin(), options[k].end());
      options[k].erase(std::unique(options[k].begin(), options[k].end()),
                       options[k].end());
    }
  }
  std::vector<Subset> candidate(n);
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == n) return types.count(TypeVector(candidate)) > 0;
    for (Subset option : options[k]) {
      candidate[k] = option;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

EliminationResult CheckElimination(const TypeSet& types) {
  EliminationResult result;
  for (auto a = types.begin(); a != types.end(); ++a) {
    for (auto b = a; b != types.end(); ++b) {
      for (std::size_t j = 0; j < a->size(); ++j) {
        if (!HasEliminationWitness(types, *a, *b, j)) {
          result.pass = false;
          result.failure = EliminationFailure{*a, *b, j};
          return result;
        }
      }
    }
  }
  return result;
}

ComparabilityResult CheckComparability(const TypeSet& types, int d) {
  ComparabilityResult result;
  for (auto a = types.begin(); a != types.end(); ++a) {
    for (auto b = std::next(a); b != types.end(); ++b) {
      if (!IsAcyclic(BuildComparabilityGraph(*a, *b, d))) {
        result.pass = false;
        result.failure = std::make_pair(*a, *b);
        return result;
      }
    }
  }
  return result;
}

SurroundingResult CheckSurrounding(const TypeSet& types, int d) {
  if (d > kMaxSurroundingDimension) {
    throw Error(ErrorCode::kResourceLimit,
                "surrounding check over ordered partitions of [" +
                    std::to_string(d) + "] exceeds the budget");
  }
  SurroundingResult result;
  const auto partitions = EnumerateOrderedPartitions(d);
  for (const auto& type : types) {
    for (const auto& partition : partitions) {
      TypeVector refined = Refine(type, partition);
      if (!types.count(refined)) {
        result.pass = false;
        result.failure = SurroundingFailure{type, partition, std::move(refined)};
        return result;
      }
    }
  }
  return result;
}

std::vector<LocalRefinementFailure> LocalRefinementFailures(
    const TypeSet& types) {
  std::vector<LocalRefinementFailure> failures;
  for (const auto& type : types) {
    for (std::size_t i = 0; i < type.size(); ++i) {
      if (SubsetSize(type[i]) < 2) continue;
      for (int k : SubsetLabels(type[i])) {
        if (!types.count(type.With(i, Singleton(k)))) {
          failures.push_back({type, i, k});
        }
      }
    }
  }
  return failures;
}

LocalRefinementResult CheckLocalRefinement(const TypeSet& types) {
  LocalRefinementResult result;
  for (const auto& type : types) {
    for (std::size_t i = 0; i < type.size(); ++i) {
      if (SubsetSize(type[i]) < 2) continue;
      for (int k : SubsetLabels(type[i])) {
        if (!types.count(type.With(i, Singleton(k)))) {
          result.pass = false;
          result.failure = LocalRefinementFailure{type, i, k};
          return result;
        }
      }
    }
  }
  return result;
}

AxiomReport CheckTropicalOrientedMatroid(const TypeSet& types, std::size_t n,
                                         int d) {
  for (const auto& type : types) {
    if (type.size() != n || !type.FitsDimension(d)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "type " + type.ToString() + " is not an (n, d)-type");
    }
  }
  AxiomReport report;
  report.boundary = CheckBoundary(types, n, d);
  report.elimination = CheckElimination(types);
  report.comparability = CheckComparability(types, d);
  report.surrounding = CheckSurrounding(types, d);
  report.local_refinement = CheckLocalRefinement(types);
  report.is_tom = report.boundary.pass && report.elimination.pass &&
                  report.comparability.pass && report.surrounding.pass;
  return report;
}

}  // namespace tropical
