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

// Exact dense linear algebra over the rationals for the small systems used in
// volume and face-dimension computations.

#ifndef TROPICAL_SRC_LINALG_HPP_
#define TROPICAL_SRC_LINALG_HPP_

#include "tropical/rational.hpp"

namespace tropical::linalg {

// Row rank by fraction-exact Gaussian elimination.
int Rank(RationalMatrix rows);

// Determinant of a square matrix.
Rational Determinant(RationalMatrix rows);

}  // namespace tropical::linalg

#endif  // TROPICAL_SRC_LINALG_HPP_
