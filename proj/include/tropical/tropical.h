/*
 * Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the tropical arrangement library.
 *
 * Every function returns a trop_status. Strings handed back through `char**`
 * out-parameters are heap-allocated and must be released with
 * trop_string_free. After a failure, trop_last_error() describes it; the
 * message is per-thread and stays valid until the next call on that thread.
 */

#ifndef TROPICAL_TROPICAL_H_
#define TROPICAL_TROPICAL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TROP_BUILDING_LIBRARY)
#define TROP_API __attribute__((visibility("default")))
#else
#define TROP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum trop_status {
  TROP_OK = 0,
  TROP_PARSE = 2,
  TROP_DIMENSION = 3,
  TROP_CONSISTENCY = 4,
  TROP_BUDGET = 5,
  TROP_RENDER_DIMENSION = 6,
  TROP_IO = 7,
  TROP_INVALID_ARGUMENT = 8,
  TROP_NOT_A_CELL = 9,
  TROP_PRECONDITION = 10,
  TROP_INTERNAL = 11
} trop_status;

typedef enum trop_format { TROP_FORMAT_JSON = 0, TROP_FORMAT_TEXT = 1 } trop_format;

typedef struct trop_arrangement trop_arrangement;

typedef struct trop_options {
  int json;                 /* nonzero: emit a JSON document */
  int flips;                /* subdivision only: refining triangulations */
  uint64_t seed;            /* perturbation sampling seed */
  uint64_t budget;          /* candidate-type enumeration cap */
  int samples;              /* 0 picks max(2nd, 64) */
  const char* command_echo; /* echoed on the first report line; may be NULL */
} trop_options;

TROP_API void trop_options_init(trop_options* options);

/* Parses `size` bytes. The digest of exactly those bytes is kept. */
TROP_API trop_status trop_arrangement_parse(const char* data, size_t size,
                                            trop_format format,
                                            trop_arrangement** out);
TROP_API void trop_arrangement_free(trop_arrangement* arr);

TROP_API size_t trop_arrangement_n(const trop_arrangement* arr);
TROP_API int trop_arrangement_d(const trop_arrangement* arr);

TROP_API trop_status trop_arrangement_serialize(const trop_arrangement* arr,
                                                trop_format format, char** out);
TROP_API trop_status trop_arrangement_digest(const trop_arrangement* arr,
                                             char** out);

/* `point_csv` is "x1,...,xd"; the type comes back as "({1,2},{3})". */
TROP_API trop_status trop_type_of(const trop_arrangement* arr,
                                  const char* point_csv, char** out);
TROP_API trop_status trop_is_generic(const trop_arrangement* arr,
                                     int* out_generic);

/*
 * Reports. trop_report_check and trop_report_subdivision fill `out` even when
 * they return TROP_CONSISTENCY, so the failing checks can be inspected.
 */
TROP_API trop_status trop_report_type_of(const trop_arrangement* arr,
                                         const char* point_csv,
                                         const trop_options* options,
                                         char** out);
TROP_API trop_status trop_report_check(const trop_arrangement* arr,
                                       const trop_options* options, char** out);
TROP_API trop_status trop_report_subdivision(const trop_arrangement* arr,
                                             const trop_options* options,
                                             char** out);

/* SVG drawing; only arrangements in the tropical plane (d = 3). */
TROP_API trop_status trop_render_svg(const trop_arrangement* arr, char** out);

TROP_API void trop_string_free(char* s);
TROP_API const char* trop_last_error(void);
TROP_API const char* trop_status_name(trop_status status);

#ifdef __cplusplus
}
#endif

#endif /* TROPICAL_TROPICAL_H_ */
