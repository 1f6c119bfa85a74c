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

#ifndef TROPICAL_ERROR_HPP_
#define TROPICAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tropical {

// Numeric values double as CLI exit codes where one exists.
enum class ErrorCode {
  kParse = 2,
  kDimensionMismatch = 3,
  kConsistency = 4,
  kResourceLimit = 5,
  kUnsupportedRender = 6,
  kIo = 7,
  kInvalidArgument = 8,
  kNotACell = 9,
  kPrecondition = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropical

#endif  // TROPICAL_ERROR_HPP_
