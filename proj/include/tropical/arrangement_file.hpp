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

// Arrangement files.
//
// JSON form, rationals always as strings:
//
//   {"n": 2, "d": 3, "apexes": [["0", "0", "0"], ["1", "1", "0"]]}
//
// Text form: a first line "n d" followed by n rows of d whitespace-separated
// rationals.

#ifndef TROPICAL_ARRANGEMENT_FILE_HPP_
#define TROPICAL_ARRANGEMENT_FILE_HPP_

#include <string>
#include <string_view>

#include "tropical/core.hpp"

namespace tropical {

enum class FileFormat { kJson, kText };

// Throws Error(kParse) on malformed input, bad shapes, n < 1 or d < 2.
Arrangement ParseArrangement(std::string_view data, FileFormat format);

// Canonical serialization; ParseArrangement inverts it exactly.
std::string SerializeArrangement(const Arrangement& arr, FileFormat format);

// "x1,...,xd" with optional surrounding whitespace per field.
ProjectivePoint ParsePoint(std::string_view csv);

// "sha256:<hex>" of the raw bytes.
std::string InputDigest(std::string_view data);

}  // namespace tropical

#endif  // TROPICAL_ARRANGEMENT_FILE_HPP_
