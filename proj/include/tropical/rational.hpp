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

#ifndef TROPICAL_RATIONAL_HPP_
#define TROPICAL_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropical {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Accepts "[+-]digits", "[+-]digits/digits" (nonzero denominator) and
// "[+-]digits.digits" with at most 18 fractional digits. Throws
// Error(kParse) on anything else.
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string FormatRational(const Rational& value);

}  // namespace tropical

#endif  // TROPICAL_RATIONAL_HPP_
