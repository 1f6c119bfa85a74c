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

#include "tropical/rational.hpp"

#include <cctype>

#include "tropical/error.hpp"

namespace tropical {
namespace {

constexpr std::size_t kMaxFractionalDigits = 18;

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void Reject(std::string_view text) {
  throw Error(ErrorCode::kParse,
              "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Reject(text);
    mpz_class n(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) {
      throw Error(ErrorCode::kParse,
                  "zero denominator in '" + std::string(text) + "'");
    }
    value = Rational(n, q);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!AllDigits(whole) || !AllDigits(frac)) Reject(text);
    if (frac.size() > kMaxFractionalDigits) {
      throw Error(ErrorCode::kParse, "more than 18 fractional digits in '" +
                                         std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class n(std::string(whole) + std::string(frac), 10);
    value = Rational(n, scale);
  } else {
    if (!AllDigits(body)) Reject(text);
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational& value) {
  // mpq get_str already omits "/1" for integers.
  return value.get_str(10);
}

}  // namespace tropical
