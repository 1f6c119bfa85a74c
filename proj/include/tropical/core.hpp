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

// Value types shared by every layer: subsets of [d], projective points,
// arrangements of max-plus hyperplanes, types, ordered partitions and the
// bipartite cell graphs of the product of simplices.
//
// Conventions. Hyperplane positions are 0-based indices (std::size_t) in the
// C++ API and 1-based in every text form. Elements of [d] are 1-based labels
// everywhere; a Subset stores label j in bit (j - 1).

#ifndef TROPICAL_CORE_HPP_
#define TROPICAL_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropical/rational.hpp"

namespace tropical {

// Largest supported d; subsets of [d] live in a 32-bit mask.
inline constexpr int kMaxDimension = 30;

using Subset = std::uint32_t;

inline constexpr Subset FullSubset(int d) {
  return d >= 32 ? ~Subset{0} : (Subset{1} << d) - 1;
}
inline constexpr Subset Singleton(int label) { return Subset{1} << (label - 1); }
inline constexpr bool Contains(Subset s, int label) {
  return (s >> (label - 1)) & 1u;
}
int SubsetSize(Subset s);
std::vector<int> SubsetLabels(Subset s);
Subset MakeSubset(const std::vector<int>& labels);

// Lexicographic order on the ascending label lists; {1} < {1,2} < {2}.
bool SubsetLess(Subset a, Subset b);

// "{1,2,3}"
std::string FormatSubset(Subset s);

// A point of TP^{d-1}: d rational coordinates modulo the all-ones direction.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  explicit ProjectivePoint(RationalVector coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](int j) const { return coords_[j]; }

  // "(1,1,0)"
  std::string ToString() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) =
      default;

 private:
  RationalVector coords_;
};

// Canonical representative: the last coordinate is shifted to zero.
ProjectivePoint Normalize(const ProjectivePoint& point);

// n max-plus hyperplanes in TP^{d-1}; row i is the apex of hyperplane i,
// stored normalized.
class Arrangement {
 public:
  // Requires n >= 1, 2 <= d <= kMaxDimension and rectangular input.
  explicit Arrangement(const RationalMatrix& apexes);
  explicit Arrangement(std::vector<ProjectivePoint> apexes);

  std::size_t n() const { return apexes_.size(); }
  int d() const { return d_; }
  const ProjectivePoint& apex(std::size_t i) const { return apexes_[i]; }
  const std::vector<ProjectivePoint>& apexes() const { return apexes_; }
  const Rational& coord(std::size_t i, int j) const { return apexes_[i][j]; }

  // n × d matrix of the normalized apex coordinates.
  RationalMatrix Matrix() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int d_ = 0;
  std::vector<ProjectivePoint> apexes_;
};

// (A_1, ..., A_n), every A_i a nonempty subset of [d].
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<Subset> entries);

  std::size_t size() const { return entries_.size(); }
  Subset operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Subset>& entries() const { return entries_; }

  // True when every entry is a subset of [d].
  bool FitsDimension(int d) const;

  // Copy with entry i replaced; the replacement must be nonempty.
  TypeVector With(std::size_t i, Subset entry) const;

  // "({1,2},{1,2,3})"
  std::string ToString() const;
  static TypeVector Parse(std::string_view text);

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend bool operator<(const TypeVector& a, const TypeVector& b);

 private:
  std::vector<Subset> entries_;
};

// Sum of |A_i|.
int TypeTotalSize(const TypeVector& type);

// Ordered blocks (P_1, ..., P_r), disjoint, nonempty and covering [d].
class OrderedPartition {
 public:
  OrderedPartition(std::vector<Subset> blocks, int d);

  const std::vector<Subset>& blocks() const { return blocks_; }
  int d() const { return d_; }

  std::string ToString() const;

  friend bool operator==(const OrderedPartition&,
                         const OrderedPartition&) = default;

 private:
  std::vector<Subset> blocks_;
  int d_;
};

// Every ordered partition of [d] once, in a fixed deterministic order. The
// count is the Fubini number of d. Throws kInvalidArgument for d < 1.
std::vector<OrderedPartition> EnumerateOrderedPartitions(int d);

// Bipartite graph on [n] ⊔ [d]; row i holds the right neighbours of left
// node i. Encodes the face of Δ_{n-1} × Δ_{d-1} spanned by the vertices
// e_i × e_j for its edges (i, j).
class CellGraph {
 public:
  CellGraph(std::size_t n, int d);
  CellGraph(std::size_t n, int d, std::vector<Subset> rows);

  std::size_t n() const { return rows_.size(); }
  int d() const { return d_; }
  Subset row(std::size_t i) const { return rows_[i]; }
  const std::vector<Subset>& rows() const { return rows_; }

  bool HasEdge(std::size_t i, int label) const {
    return Contains(rows_[i], label);
  }
  void AddEdge(std::size_t i, int label) { rows_[i] |= Singleton(label); }
  void RemoveEdge(std::size_t i, int label) { rows_[i] &= ~Singleton(label); }
  int EdgeCount() const;
  bool Empty() const { return EdgeCount() == 0; }

  // Edges as (left, right) pairs with 1-based labels, sorted.
  std::vector<std::pair<int, int>> Edges() const;

  // Edge-set inclusion.
  bool IsSubgraphOf(const CellGraph& other) const;

  // "[(1,1),(1,2),(2,3)]"
  std::string ToString() const;

  friend bool operator==(const CellGraph&, const CellGraph&) = default;
  friend bool operator<(const CellGraph& a, const CellGraph& b);

 private:
  int d_;
  std::vector<Subset> rows_;
};

CellGraph CompleteGraph(std::size_t n, int d);

}  // namespace tropical

#endif  // TROPICAL_CORE_HPP_
