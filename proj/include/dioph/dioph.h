// Copyright 2026 The dioph Authors
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


#ifndef DIOPH_DIOPH_H_
#define DIOPH_DIOPH_H_

#include <stddef.h>

#if defined(_WIN32)
#define DIOPH_API __declspec(dllexport)
#else
#define DIOPH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dioph_status {
  DIOPH_OK = 0,
  DIOPH_ERR_INTERNAL = 1,
  DIOPH_ERR_VALIDATION = 2,
  DIOPH_ERR_PRECISION = 3,
  DIOPH_ERR_RESOURCE = 4,
  DIOPH_ERR_IO = 5
} dioph_status;

typedef enum dioph_format { DIOPH_FORMAT_JSON = 0, DIOPH_FORMAT_CSV = 1 } dioph_format;

// Limits and the last error message. Not safe for concurrent use; give each
// thread its own context.
typedef struct dioph_context dioph_context;
// Output of one command, renderable as JSON or CSV.
typedef struct dioph_result dioph_result;

DIOPH_API const char* dioph_version(void);
DIOPH_API const char* dioph_status_name(dioph_status status);

DIOPH_API dioph_status dioph_context_new(dioph_context** out);
DIOPH_API void dioph_context_free(dioph_context* ctx);
// Zero keeps the current value.
DIOPH_API dioph_status dioph_context_set_limits(dioph_context* ctx,
                                                unsigned precision_cap_bits,
                                                size_t point_cap,
                                                unsigned dimension_limit);
// Message of the last failed call on ctx; "" after a success.
DIOPH_API const char* dioph_context_error(const dioph_context* ctx);

// Runs `command` (norm, dirichlet, profile, twist, liminf, ci-sim) on a JSON
// request object. On DIOPH_ERR_RESOURCE *out may still hold a partial
// result; otherwise *out is set only on DIOPH_OK.
DIOPH_API dioph_status dioph_run(dioph_context* ctx, const char* command,
                                 const char* request_json, dioph_result** out);

// 1 when the result covers the whole request.
DIOPH_API int dioph_result_complete(const dioph_result* result);
// *text is allocated; release it with dioph_free.
DIOPH_API dioph_status dioph_result_render(const dioph_result* result, dioph_format format,
                                           char** text);
// NULL, "" or "-" writes to stdout.
DIOPH_API dioph_status dioph_result_write(dioph_context* ctx, const dioph_result* result,
                                          dioph_format format, const char* path);
DIOPH_API void dioph_result_free(dioph_result* result);
DIOPH_API void dioph_free(void* p);

#ifdef __cplusplus
}
#endif

#endif  // DIOPH_DIOPH_H_
