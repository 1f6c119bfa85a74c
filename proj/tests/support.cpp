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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "tropical/geometry.hpp"

namespace tropical::testing {

Rational RandomRational(Rng& rng, int max_den, int span) {
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long num =
      std::uniform_int_distribution<long>(-span * den, span * den)(rng);
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Arrangement RandomArrangement(Rng& rng, std::size_t n, int d, int max_den) {
  RationalMatrix rows(n, RationalVector(d));
  for (auto& row : rows) {
    for (auto& entry : row) entry = RandomRational(rng, max_den);
  }
  return Arrangement(rows);
}

Arrangement RandomGenericArrangement(Rng& rng, std::size_t n, int d) {
  while (true) {
    Arrangement arr = RandomArrangement(rng, n, d);
    if (IsGeneric(arr)) return arr;
  }
}

NonGenericInstance RandomNonGeneric(Rng& rng, std::size_t n, bool coincide) {
  RationalMatrix rows = RandomGenericArrangement(rng, n, 3).Matrix();
  const std::size_t host = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::size_t moved = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
  if (moved >= host) ++moved;
  rows[moved] = rows[host];
  if (!coincide) {
    // x - v_host = s·(e_k + e_l) has argmax {k, l}: the ray of H_host in
    // direction -e_j.
    const int j = std::uniform_int_distribution<int>(0, 2)(rng);
    Rational s = RandomRational(rng, 20, 2);
    s = abs(s) + Rational(1, 7);
    for (int k = 0; k < 3; ++k) {
      if (k != j) rows[moved][k] += s;
    }
  }
  return {Arrangement(rows), moved, host, coincide};
}

std::vector<Subset> NaiveType(const RationalMatrix& apexes,
                              const RationalVector& x) {
  std::vector<Subset> type;
  for (const auto& v : apexes) {
    Rational best = x[0] - v[0];
    for (std::size_t j = 1; j < x.size(); ++j) best = std::max(best, Rational(x[j] - v[j]));
    Subset s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] - v[j] == best) s |= Subset{1} << j;
    }
    type.push_back(s);
  }
  return type;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int m = 1; m <= k; ++m) out = out * (n - k + m) / m;
  return out;
}

std::uint64_t FubiniNumber(int d) {
  std::vector<std::uint64_t> f(d + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= d; ++m) {
    for (int k = 1; k <= m; ++k) f[m] += Binomial(m, k) * f[m - k];
  }
  return f[d];
}

int VertexRankDim(const CellGraph& graph) {
  const std::size_t n = graph.n();
  const int d = graph.d();
  std::vector<std::vector<double>> rows;
  for (auto [i, j] : graph.Edges()) {
    std::vector<double> v(n + d, 0.0);
    v[i - 1] = 1.0;
    v[n + j - 1] = 1.0;
    rows.push_back(std::move(v));
  }
  int rank = 0;
  const std::size_t cols = n + d;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && std::fabs(rows[pivot][c]) < 1e-9) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || std::fabs(rows[r][c]) < 1e-12) continue;
      const double factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  // The vertices all lie on the hyperplane sum(left) = 1, so linear rank is
  // affine dimension plus one.
  return rank - 1;
}

std::set<std::vector<int>> Compositions(int total, int parts) {
  std::set<std::vector<int>> out;
  std::vector<int> current(parts, 0);
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[index] = remaining;
      out.insert(current);
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      current[index] = a;
      self(self, index + 1, remaining - a);
    }
  };
  if (parts > 0) fill(fill, 0, total);
  return out;
}

std::uint64_t DraconianCount(const CellGraph& graph) {
  const std::size_t n = graph.n();
  std::uint64_t count = 0;
  for (const auto& a : Compositions(graph.d() - 1, static_cast<int>(n))) {
    bool ok = true;
    for (std::uint32_t mask = 1; ok && mask < (1u << n); ++mask) {
      int sum = 0;
      Subset neighbours = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          sum += a[i];
          neighbours |= graph.row(i);
        }
      }
      ok = sum < SubsetSize(neighbours);
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<int> LeftDegreeVector(const CellGraph& tree) {
  std::vector<int> out;
  for (Subset row : tree.rows()) out.push_back(SubsetSize(row) - 1);
  return out;
}

std::vector<CellGraph> StaircaseTriangulation(const std::vector<int>& perm) {
  const int d = static_cast<int>(perm.size());
  std::vector<CellGraph> trees;
  for (int m = 1; m <= d; ++m) {
    CellGraph tree(2, d);
    for (int k = 0; k < m; ++k) tree.AddEdge(0, perm[k]);
    for (int k = m - 1; k < d; ++k) tree.AddEdge(1, perm[k]);
    trees.push_back(tree);
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

namespace {

// Solutions of x_j = v_ij + c_i along every spanning tree of K_{n,d},
// normalized and deduplicated. Trees are found by brute force over edge
// subsets of size n + d - 1.
std::vector<RationalVector> TreePoints(const RationalMatrix& v) {
  const std::size_t n = v.size();
  const int d = static_cast<int>(v[0].size());
  const int nodes = static_cast<int>(n) + d;
  const int edges = static_cast<int>(n) * d;
  std::set<RationalVector> points;
  std::vector<int> pick(nodes - 1);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool tree = true;
    for (int e : pick) {
      const int a = find(e / d), b = find(static_cast<int>(n) + e % d);
      if (a == b) {
        tree = false;
        break;
      }
      parent[a] = b;
    }
    if (tree) {
      std::vector<std::optional<Rational>> c(n), x(d);
      c[0] = Rational(0);
      for (bool progress = true; progress;) {
        progress = false;
        for (int e : pick) {
          const std::size_t i = e / d;
          const int j = e % d;
          if (c[i] && !x[j]) {
            x[j] = v[i][j] + *c[i];
            progress = true;
          } else if (!c[i] && x[j]) {
            c[i] = *x[j] - v[i][j];
            progress = true;
          }
        }
      }
      RationalVector point(d);
      for (int j = 0; j < d; ++j) point[j] = *x[j] - *x[d - 1];
      points.insert(point);
    }
    int k = nodes - 2;
    while (k >= 0 && pick[k] == edges - (nodes - 1) + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int m = k + 1; m < nodes - 1; ++m) pick[m] = pick[m - 1] + 1;
  }
  return {points.begin(), points.end()};
}

}  // namespace

std::vector<RationalVector> SamplePoints(const RationalMatrix& apexes,
                                         std::size_t count, Rng& rng) {
  const int d = static_cast<int>(apexes[0].size());
  const std::vector<RationalVector> centers = TreePoints(apexes);
  Rational reach = 1;
  for (const auto& row : apexes) {
    for (const auto& c : row) reach = std::max(reach, Rational(abs(c)));
  }
  reach = 3 * reach + 2;

  std::vector<RationalVector> out;
  std::uniform_int_distribution<long> unit(-1000000, 1000000);
  std::uniform_int_distribution<int> scale_pick(2, 9);
  for (std::size_t k = 0; k < count; ++k) {
    RationalVector x(d);
    if (k % 2 == 0) {
      for (auto& c : x) {
        c = reach * Rational(unit(rng), 1000000);
        c.canonicalize();
      }
    } else {
      const RationalVector& center = centers[(k / 2) % centers.size()];
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, scale_pick(rng));
      for (int j = 0; j < d; ++j) {
        Rational offset(unit(rng), 1000000);
        offset /= scale;
        x[j] = center[j] + offset;
        x[j].canonicalize();
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace tropical::testing
