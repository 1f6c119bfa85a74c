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

#include "tropical/tropical.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "tropical/arrangement_file.hpp"
#include "tropical/error.hpp"
#include "tropical/geometry.hpp"
#include "tropical/render.hpp"
#include "tropical/report.hpp"

struct trop_arrangement {
  tropical::Arrangement arrangement;
  std::string digest;
};

namespace {

thread_local std::string last_error;

trop_status StatusOf(tropical::ErrorCode code) {
  using tropical::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return TROP_PARSE;
    case ErrorCode::kDimensionMismatch: return TROP_DIMENSION;
    case ErrorCode::kConsistency: return TROP_CONSISTENCY;
    case ErrorCode::kResourceLimit: return TROP_BUDGET;
    case ErrorCode::kUnsupportedRender: return TROP_RENDER_DIMENSION;
    case ErrorCode::kIo: return TROP_IO;
    case ErrorCode::kInvalidArgument: return TROP_INVALID_ARGUMENT;
    case ErrorCode::kNotACell: return TROP_NOT_A_CELL;
    case ErrorCode::kPrecondition: return TROP_PRECONDITION;
  }
  return TROP_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
trop_status Guard(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tropical::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TROP_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TROP_INTERNAL;
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

trop_status Missing(const char* what) {
  last_error = std::string(what) + " must not be null";
  return TROP_INVALID_ARGUMENT;
}

tropical::FileFormat FormatOf(trop_format format) {
  return format == TROP_FORMAT_TEXT ? tropical::FileFormat::kText
                                    : tropical::FileFormat::kJson;
}

tropical::ReportOptions OptionsOf(const trop_options* options) {
  tropical::ReportOptions out;
  if (options == nullptr) return out;
  out.json = options->json != 0;
  out.flips = options->flips != 0;
  out.seed = options->seed;
  out.budget = options->budget;
  out.samples = options->samples;
  if (options->command_echo != nullptr) out.command = options->command_echo;
  return out;
}

trop_status Emit(const tropical::Report& report, char** out) {
  *out = CopyString(report.text);
  if (report.exit_status != 0) {
    last_error = "internal consistency check failed";
    return static_cast<trop_status>(report.exit_status);
  }
  return TROP_OK;
}

}  // namespace

extern "C" {

void trop_options_init(trop_options* options) {
  if (options == nullptr) return;
  options->json = 0;
  options->flips = 0;
  options->seed = 0;
  options->budget = tropical::kDefaultEnumerationBudget;
  options->samples = 0;
  options->command_echo = nullptr;
}

trop_status trop_arrangement_parse(const char* data, size_t size,
                                   trop_format format, trop_arrangement** out) {
  if (out == nullptr) return Missing("out");
  *out = nullptr;
  if (data == nullptr && size != 0) return Missing("data");
  return Guard([&] {
    std::string_view bytes(data == nullptr ? "" : data, size);
    *out = new trop_arrangement{tropical::ParseArrangement(bytes, FormatOf(format)),
                                tropical::InputDigest(bytes)};
    return TROP_OK;
  });
}

void trop_arrangement_free(trop_arrangement* arr) { delete arr; }

size_t trop_arrangement_n(const trop_arrangement* arr) {
  return arr == nullptr ? 0 : arr->arrangement.n();
}

int trop_arrangement_d(const trop_arrangement* arr) {
  return arr == nullptr ? 0 : arr->arrangement.d();
}

trop_status trop_arrangement_serialize(const trop_arrangement* arr,
                                       trop_format format, char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    *out = CopyString(
        tropical::SerializeArrangement(arr->arrangement, FormatOf(format)));
    return TROP_OK;
  });
}

trop_status trop_arrangement_digest(const trop_arrangement* arr, char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    *out = CopyString(arr->digest);
    return TROP_OK;
  });
}

trop_status trop_type_of(const trop_arrangement* arr, const char* point_csv,
                         char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (point_csv == nullptr) return Missing("point");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    const auto point = tropical::ParsePoint(point_csv);
    *out = CopyString(tropical::TypeOfPoint(arr->arrangement, point).ToString());
    return TROP_OK;
  });
}

trop_status trop_is_generic(const trop_arrangement* arr, int* out_generic) {
  if (arr == nullptr) return Missing("arrangement");
  if (out_generic == nullptr) return Missing("out");
  return Guard([&] {
    *out_generic = tropical::IsGeneric(arr->arrangement) ? 1 : 0;
    return TROP_OK;
  });
}

trop_status trop_report_type_of(const trop_arrangement* arr,
                                const char* point_csv,
                                const trop_options* options, char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (point_csv == nullptr) return Missing("point");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    return Emit(tropical::TypeOfReport(arr->arrangement, arr->digest, point_csv,
                                       OptionsOf(options)),
                out);
  });
}

trop_status trop_report_check(const trop_arrangement* arr,
                              const trop_options* options, char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    return Emit(
        tropical::CheckReport(arr->arrangement, arr->digest, OptionsOf(options)),
        out);
  });
}

trop_status trop_report_subdivision(const trop_arrangement* arr,
                                    const trop_options* options, char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    return Emit(tropical::SubdivisionReport(arr->arrangement, arr->digest,
                                            OptionsOf(options)),
                out);
  });
}

trop_status trop_render_svg(const trop_arrangement* arr, char** out) {
  if (arr == nullptr) return Missing("arrangement");
  if (out == nullptr) return Missing("out");
  return Guard([&] {
    *out = CopyString(tropical::RenderSvg(arr->arrangement));
    return TROP_OK;
  });
}

void trop_string_free(char* s) { std::free(s); }

const char* trop_last_error(void) { return last_error.c_str(); }

const char* trop_status_name(trop_status status) {
  switch (status) {
    case TROP_OK: return "ok";
    case TROP_PARSE: return "parse error";
    case TROP_DIMENSION: return "dimension mismatch";
    case TROP_CONSISTENCY: return "internal consistency violation";
    case TROP_BUDGET: return "budget exceeded";
    case TROP_RENDER_DIMENSION: return "unsupported render dimension";
    case TROP_IO: return "i/o error";
    case TROP_INVALID_ARGUMENT: return "invalid argument";
    case TROP_NOT_A_CELL: return "not a cell";
    case TROP_PRECONDITION: return "precondition violated";
    case TROP_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
