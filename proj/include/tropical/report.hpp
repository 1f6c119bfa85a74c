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

// Line-oriented and JSON reports behind the CLI subcommands. Output depends
// only on the arrangement, the digest, and the options, so identical inputs
// produce identical bytes.

#ifndef TROPICAL_REPORT_HPP_
#define TROPICAL_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "tropical/core.hpp"
#include "tropical/geometry.hpp"

namespace tropical {

struct ReportOptions {
  bool json = false;
  bool flips = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  int samples = 0;  // 0: max(2·n·d, kDefaultSamples)
  std::string command;  // echoed verbatim
};

inline constexpr int kDefaultSamples = 64;

struct Report {
  std::string text;
  int exit_status = 0;  // 0, or 4 when an internal consistency check failed
};

// Throws Error(kParse) for a malformed point, kDimensionMismatch for a point
// of the wrong length.
Report TypeOfReport(const Arrangement& arr, std::string_view digest,
                    std::string_view point_csv, const ReportOptions& options);

Report CheckReport(const Arrangement& arr, std::string_view digest,
                   const ReportOptions& options);

Report SubdivisionReport(const Arrangement& arr, std::string_view digest,
                         const ReportOptions& options);

}  // namespace tropical

#endif  // TROPICAL_REPORT_HPP_
