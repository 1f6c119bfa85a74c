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

#include "tropical/arrangement_file.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void ParseFailure(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

void CheckShape(long long n, long long d) {
  if (n < 1) ParseFailure("n must be at least 1, got " + std::to_string(n));
  if (d < 2 || d > kMaxDimension) {
    ParseFailure("d must lie in [2, " + std::to_string(kMaxDimension) +
                 "], got " + std::to_string(d));
  }
}

Rational JsonRational(const json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) {
    return Rational(mpz_class(value.dump(), 10));
  }
  ParseFailure("apex entries must be rational strings, got " + value.dump());
}

Arrangement ParseJson(std::string_view data) {
  json doc;
  try {
    doc = json::parse(data.begin(), data.end());
  } catch (const json::parse_error& e) {
    ParseFailure(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) ParseFailure("arrangement file must be a JSON object");
  for (const char* key : {"n", "d", "apexes"}) {
    if (!doc.contains(key)) ParseFailure(std::string("missing key '") + key + "'");
  }
  if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer()) {
    ParseFailure("n and d must be integers");
  }
  const long long n = doc["n"].get<long long>();
  const long long d = doc["d"].get<long long>();
  CheckShape(n, d);
  const json& rows = doc["apexes"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n) {
    ParseFailure("apexes must be an array of n = " + std::to_string(n) + " rows");
  }
  RationalMatrix apexes;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<long long>(row.size()) != d) {
      ParseFailure("every apex row must hold d = " + std::to_string(d) +
                   " entries");
    }
    RationalVector coords;
    for (const auto& entry : row) coords.push_back(JsonRational(entry));
    apexes.push_back(std::move(coords));
  }
  return Arrangement(apexes);
}

Arrangement ParseText(std::string_view data) {
  std::istringstream in{std::string(data)};
  std::string n_token, d_token;
  if (!(in >> n_token >> d_token)) ParseFailure("text form needs a header 'n d'");
  auto to_int = [](const std::string& token) {
    Rational value = ParseRational(token);
    if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
      ParseFailure("header entries must be integers, got '" + token + "'");
    }
    return static_cast<long long>(value.get_num().get_si());
  };
  const long long n = to_int(n_token);
  const long long d = to_int(d_token);
  CheckShape(n, d);
  RationalMatrix apexes(n);
  for (auto& row : apexes) {
    for (long long j = 0; j < d; ++j) {
      std::string token;
      if (!(in >> token)) ParseFailure("text form ended before n·d entries");
      row.push_back(ParseRational(token));
    }
  }
  std::string trailing;
  if (in >> trailing) ParseFailure("unexpected trailing token '" + trailing + "'");
  return Arrangement(apexes);
}

}  // namespace

Arrangement ParseArrangement(std::string_view data, FileFormat format) {
  return format == FileFormat::kJson ? ParseJson(data) : ParseText(data);
}

std::string SerializeArrangement(const Arrangement& arr, FileFormat format) {
  if (format == FileFormat::kText) {
    std::string out = std::to_string(arr.n()) + " " + std::to_string(arr.d()) + "\n";
    for (const auto& apex : arr.apexes()) {
      for (int j = 0; j < arr.d(); ++j) {
        if (j) out += ' ';
        out += FormatRational(apex[j]);
      }
      out += '\n';
    }
    return out;
  }
  json doc;
  doc["n"] = arr.n();
  doc["d"] = arr.d();
  json rows = json::array();
  for (const auto& apex : arr.apexes()) {
    json row = json::array();
    for (const auto& c : apex.coords()) row.push_back(FormatRational(c));
    rows.push_back(std::move(row));
  }
  doc["apexes"] = std::move(rows);
  return doc.dump() + "\n";
}

ProjectivePoint ParsePoint(std::string_view csv) {
  RationalVector coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string_view field = csv.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
      field.remove_prefix(1);
    }
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) {
      field.remove_suffix(1);
    }
    coords.push_back(ParseRational(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ProjectivePoint(std::move(coords));
}

std::string InputDigest(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kIo, "SHA-256 digest failed");
  }
  std::string out = "sha256:";
  char hex[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(hex, sizeof hex, "%02x", digest[k]);
    out += hex;
  }
  return out;
}

}  // namespace tropical
