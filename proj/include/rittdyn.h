// Copyright 2026 The rittdyn Authors
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

/* C interface to rittdyn. Every object is an opaque handle; every fallible
 * call returns an rd_status and leaves a message on the context. Strings
 * returned through char** are owned by the caller and released with
 * rd_string_free. */

#ifndef RITTDYN_H_
#define RITTDYN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RD_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RD_API __attribute__((visibility("default")))
#else
#define RD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rd_status {
  RD_OK = 0,
  RD_ERR_PRECONDITION = 1,
  RD_ERR_NUMERIC = 2,
  RD_ERR_INTERNAL = 3,
  RD_ERR_SYNTAX = 4,
  RD_ERR_INVALID_ARGUMENT = 5, /* null handle or out pointer */
  RD_ERR_BUFFER_TOO_SMALL = 6,
  RD_ERR_UNKNOWN = 7
} rd_status;

typedef enum rd_genus_class {
  RD_GENUS_ZERO = 0,
  RD_GENUS_ONE = 1,
  RD_GENUS_GREATER_THAN_ONE = 2
} rd_genus_class;

typedef struct rd_context rd_context;
typedef struct rd_func rd_func;

RD_API const char* rd_version(void);
RD_API const char* rd_status_string(rd_status s);

RD_API rd_status rd_context_create(rd_context** out);
RD_API void rd_context_destroy(rd_context* ctx);
/* Message of the last failed call on ctx, or "". */
RD_API const char* rd_context_last_error(const rd_context* ctx);
/* Byte offset of the last syntax error, or SIZE_MAX. */
RD_API size_t rd_context_last_error_offset(const rd_context* ctx);
/* Default seed for rd_execute; without it RITTDYN_SEED, then 0, apply. */
RD_API rd_status rd_context_set_seed(rd_context* ctx, uint64_t seed);
RD_API rd_status rd_context_set_degree_guard(rd_context* ctx, int guard);

RD_API rd_status rd_func_parse(rd_context* ctx, const char* text, rd_func** out);
RD_API rd_func* rd_func_clone(const rd_func* f);
RD_API void rd_func_destroy(rd_func* f);
RD_API int rd_func_degree(const rd_func* f);
/* Canonical text including the terminating NUL. On RD_ERR_BUFFER_TOO_SMALL
 * *needed holds the required capacity. */
RD_API rd_status rd_func_render(const rd_func* f, char* buf, size_t cap, size_t* needed);
RD_API rd_status rd_func_compose(rd_context* ctx, const rd_func* f, const rd_func* g, rd_func** out);
RD_API rd_status rd_func_iterate(rd_context* ctx, const rd_func* f, int d, rd_func** out);
RD_API rd_status rd_func_equal(const rd_func* f, const rd_func* g, int* out);

RD_API rd_status rd_genus_class_of(rd_context* ctx, const rd_func* f, rd_genus_class* out);
RD_API rd_status rd_is_tame(rd_context* ctx, const rd_func* f, uint64_t seed, int* out);

/* Runs a command-line command. keys/values follow the long flag names
 * ("seed", "horizon", "A", ...); "arg" adds a positional function. The
 * process exit code goes to *exit_code; json and text, when non-null,
 * receive the report. Returns RD_OK whenever a report was produced. */
RD_API rd_status rd_execute(rd_context* ctx, const char* command, const char* const* keys,
                            const char* const* values, size_t count, int* exit_code,
                            char** json, char** text);
RD_API void rd_string_free(char* s);

RD_API size_t rd_command_count(void);
RD_API const char* rd_command_name(size_t index);
RD_API const char* rd_usage(void);

#ifdef __cplusplus
}
#endif

#endif /* RITTDYN_H_ */
