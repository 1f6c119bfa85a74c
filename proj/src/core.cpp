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

#include "tropical/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "tropical/error.hpp"

namespace tropical {

int SubsetSize(Subset s) { return std::popcount(s); }

std::vector<int> SubsetLabels(Subset s) {
  std::vector<int> labels;
  while (s != 0) {
    labels.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return labels;
}

Subset MakeSubset(const std::vector<int>& labels) {
  Subset s = 0;
  for (int label : labels) {
    if (label < 1 || label > kMaxDimension) {
      throw Error(ErrorCode::kInvalidArgument,
                  "subset label out of range: " + std::to_string(label));
    }
    s |= Singleton(label);
  }
  return s;
}

bool SubsetLess(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::string FormatSubset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int label : SubsetLabels(s)) {
    if (!first) out += ',';
    out += std::to_string(label);
    first = false;
  }
  out += '}';
  return out;
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(RationalVector coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "point needs coordinates");
  }
}

std::string ProjectivePoint::ToString() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) out += ',';
    out += FormatRational(coords_[j]);
  }
  out += ')';
  return out;
}

ProjectivePoint Normalize(const ProjectivePoint& point) {
  RationalVector coords = point.coords();
  const Rational shift = coords.back();
  for (auto& c : coords) c -= shift;
  return ProjectivePoint(std::move(coords));
}

// ---------------------------------------------------------------------------

namespace {

void ValidateShape(std::size_t n, int d) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "arrangement needs at least one hyperplane");
  }
  if (d < 2 || d > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "arrangement dimension d must lie in [2, " +
                    std::to_string(kMaxDimension) + "], got " +
                    std::to_string(d));
  }
}

}  // namespace

Arrangement::Arrangement(const RationalMatrix& apexes) {
  ValidateShape(apexes.size(), apexes.empty() ? 0 : int(apexes[0].size()));
  d_ = static_cast<int>(apexes[0].size());
  for (const auto& row : apexes) {
    if (static_cast<int>(row.size()) != d_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "apex rows have differing lengths");
    }
    apexes_.push_back(Normalize(ProjectivePoint(row)));
  }
}

Arrangement::Arrangement(std::vector<ProjectivePoint> apexes) {
  ValidateShape(apexes.size(), apexes.empty() ? 0 : apexes[0].dim());
  d_ = apexes[0].dim();
  for (const auto& p : apexes) {
    if (p.dim() != d_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "apex rows have differing lengths");
    }
    apexes_.push_back(Normalize(p));
  }
}

RationalMatrix Arrangement::Matrix() const {
  RationalMatrix rows;
  for (const auto& apex : apexes_) rows.push_back(apex.coords());
  return rows;
}

// ---------------------------------------------------------------------------

TypeVector::TypeVector(std::vector<Subset> entries)
    : entries_(std::move(entries)) {
  for (Subset s : entries_) {
    if (s == 0) {
      throw Error(ErrorCode::kInvalidArgument, "type entries must be nonempty");
    }
  }
}

bool TypeVector::FitsDimension(int d) const {
  const Subset full = FullSubset(d);
  return std::all_of(entries_.begin(), entries_.end(),
                     [full](Subset s) { return (s & ~full) == 0; });
}

TypeVector TypeVector::With(std::size_t i, Subset entry) const {
  std::vector<Subset> copy = entries_;
  copy.at(i) = entry;
  return TypeVector(std::move(copy));
}

std::string TypeVector::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += FormatSubset(entries_[i]);
  }
  out += ')';
  return out;
}

TypeVector TypeVector::Parse(std::string_view text) {
  auto fail = [&]() -> TypeVector {
    throw Error(ErrorCode::kParse,
                "malformed type '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail();
    ++pos;
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos || pos - start > 2) fail();
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  std::vector<Subset> entries;
  expect('(');
  while (true) {
    expect('{');
    Subset s = 0;
    int last = 0;
    while (true) {
      int label = read_int();
      if (label <= last || label > kMaxDimension) fail();
      s |= Singleton(label);
      last = label;
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect('}');
    entries.push_back(s);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(')');
  if (pos != text.size()) fail();
  return TypeVector(std::move(entries));
}

bool operator<(const TypeVector& a, const TypeVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                      b.entries_.begin(), b.entries_.end(),
                                      SubsetLess);
}

int TypeTotalSize(const TypeVector& type) {
  int total = 0;
  for (Subset s : type.entries()) total += SubsetSize(s);
  return total;
}

// ---------------------------------------------------------------------------

OrderedPartition::OrderedPartition(std::vector<Subset> blocks, int d)
    : blocks_(std::move(blocks)), d_(d) {
  if (d < 1 || d > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument, "partition ground set out of range");
  }
  Subset seen = 0;
  for (Subset b : blocks_) {
    if (b == 0 || (b & seen) != 0 || (b & ~FullSubset(d)) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ordered partition blocks must be nonempty and disjoint");
    }
    seen |= b;
  }
  if (seen != FullSubset(d)) {
    throw Error(ErrorCode::kInvalidArgument,
                "ordered partition blocks must cover [d]");
  }
}

std::string OrderedPartition::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += FormatSubset(blocks_[i]);
  }
  out += ')';
  return out;
}

namespace {

void ExtendPartitions(Subset remaining, std::vector<Subset>& prefix, int d,
                      std::vector<OrderedPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix, d);
    return;
  }
  // Submasks of `remaining` in increasing numeric order.
  for (Subset block = remaining & (~remaining + 1); block != 0;
       block = (block - remaining) & remaining) {
    prefix.push_back(block);
    ExtendPartitions(remaining & ~block, prefix, d, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> EnumerateOrderedPartitions(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "ordered partitions need d >= 1, got " + std::to_string(d));
  }
  std::vector<OrderedPartition> out;
  std::vector<Subset> prefix;
  ExtendPartitions(FullSubset(d), prefix, d, out);
  return out;
}

// ---------------------------------------------------------------------------

CellGraph::CellGraph(std::size_t n, int d) : d_(d), rows_(n, 0) {}

CellGraph::CellGraph(std::size_t n, int d, std::vector<Subset> rows)
    : d_(d), rows_(std::move(rows)) {
  if (rows_.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "cell graph row count mismatch");
  }
  for (Subset r : rows_) {
    if ((r & ~FullSubset(d)) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "cell graph edge outside [d]");
    }
  }
}

int CellGraph::EdgeCount() const {
  int count = 0;
  for (Subset r : rows_) count += SubsetSize(r);
  return count;
}

std::vector<std::pair<int, int>> CellGraph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (int j : SubsetLabels(rows_[i])) {
      edges.emplace_back(static_cast<int>(i) + 1, j);
    }
  }
  return edges;
}

bool CellGraph::IsSubgraphOf(const CellGraph& other) const {
  if (other.rows_.size() != rows_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((rows_[i] & ~other.rows_[i]) != 0) return false;
  }
  return true;
}

std::string CellGraph::ToString() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (auto [i, j] : Edges()) {
    if (!first) out << ',';
    out << '(' << i << ',' << j << ')';
    first = false;
  }
  out << ']';
  return out.str();
}

bool operator<(const CellGraph& a, const CellGraph& b) {
  return a.Edges() < b.Edges();
}

CellGraph CompleteGraph(std::size_t n, int d) {
  return CellGraph(n, d, std::vector<Subset>(n, FullSubset(d)));
}

}  // namespace tropical
