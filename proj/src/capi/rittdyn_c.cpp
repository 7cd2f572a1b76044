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

#include "rittdyn.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <optional>
#include <string>

#include "rittdyn/cli.hpp"
#include "rittdyn/error.hpp"
#include "rittdyn/expr.hpp"
#include "rittdyn/fiberprod.hpp"
#include "rittdyn/orbifold.hpp"

struct rd_context {
  std::string last_error;
  std::size_t last_offset = SIZE_MAX;
  std::optional<std::uint64_t> seed;
  int degree_guard = rittdyn::kDefaultDegreeGuard;
};

struct rd_func {
  rittdyn::RatFunc f;
};

namespace {

rd_status Fail(rd_context* ctx, rd_status s, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return s;
}

// Runs body, translating exceptions into status codes on ctx.
template <typename F>
rd_status Guard(rd_context* ctx, F&& body) {
  if (ctx) {
    ctx->last_error.clear();
    ctx->last_offset = SIZE_MAX;
  }
  try {
    body();
    return RD_OK;
  } catch (const rittdyn::SyntaxError& e) {
    if (ctx) ctx->last_offset = e.offset();
    return Fail(ctx, RD_ERR_SYNTAX, e.what());
  } catch (const rittdyn::Error& e) {
    switch (e.kind()) {
      case rittdyn::ErrorKind::kPrecondition: return Fail(ctx, RD_ERR_PRECONDITION, e.what());
      case rittdyn::ErrorKind::kNumeric: return Fail(ctx, RD_ERR_NUMERIC, e.what());
      case rittdyn::ErrorKind::kSyntax: return Fail(ctx, RD_ERR_SYNTAX, e.what());
      case rittdyn::ErrorKind::kInternal: return Fail(ctx, RD_ERR_INTERNAL, e.what());
    }
    return Fail(ctx, RD_ERR_UNKNOWN, e.what());
  } catch (const std::exception& e) {
    return Fail(ctx, RD_ERR_UNKNOWN, e.what());
  } catch (...) {
    return Fail(ctx, RD_ERR_UNKNOWN, "unknown exception");
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* rd_version(void) { return "0.1.0"; }

const char* rd_status_string(rd_status s) {
  switch (s) {
    case RD_OK: return "ok";
    case RD_ERR_PRECONDITION: return "precondition";
    case RD_ERR_NUMERIC: return "numeric";
    case RD_ERR_INTERNAL: return "internal";
    case RD_ERR_SYNTAX: return "syntax";
    case RD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RD_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case RD_ERR_UNKNOWN: return "unknown";
  }
  return "unknown";
}

rd_status rd_context_create(rd_context** out) {
  if (!out) return RD_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) rd_context();
  return *out ? RD_OK : RD_ERR_UNKNOWN;
}

void rd_context_destroy(rd_context* ctx) { delete ctx; }

const char* rd_context_last_error(const rd_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

size_t rd_context_last_error_offset(const rd_context* ctx) {
  return ctx ? ctx->last_offset : SIZE_MAX;
}

rd_status rd_context_set_seed(rd_context* ctx, uint64_t seed) {
  if (!ctx) return RD_ERR_INVALID_ARGUMENT;
  ctx->seed = seed;
  return RD_OK;
}

rd_status rd_context_set_degree_guard(rd_context* ctx, int guard) {
  if (!ctx) return RD_ERR_INVALID_ARGUMENT;
  if (guard < 1) return Fail(ctx, RD_ERR_PRECONDITION, "degree guard must be positive");
  ctx->degree_guard = guard;
  return RD_OK;
}

rd_status rd_func_parse(rd_context* ctx, const char* text, rd_func** out) {
  if (!ctx || !text || !out) return Fail(ctx, RD_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return Guard(ctx, [&] { *out = new rd_func{rittdyn::ParseFunction(text, ctx->degree_guard)}; });
}

rd_func* rd_func_clone(const rd_func* f) { return f ? new (std::nothrow) rd_func{f->f} : nullptr; }

void rd_func_destroy(rd_func* f) { delete f; }

int rd_func_degree(const rd_func* f) { return f ? f->f.degree() : -1; }

rd_status rd_func_render(const rd_func* f, char* buf, size_t cap, size_t* needed) {
  if (!f) return RD_ERR_INVALID_ARGUMENT;
  std::string s = f->f.ToString();
  if (needed) *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1) return RD_ERR_BUFFER_TOO_SMALL;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return RD_OK;
}

rd_status rd_func_compose(rd_context* ctx, const rd_func* f, const rd_func* g, rd_func** out) {
  if (!ctx || !f || !g || !out) return Fail(ctx, RD_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return Guard(ctx, [&] { *out = new rd_func{rittdyn::Compose(f->f, g->f, ctx->degree_guard)}; });
}

rd_status rd_func_iterate(rd_context* ctx, const rd_func* f, int d, rd_func** out) {
  if (!ctx || !f || !out) return Fail(ctx, RD_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return Guard(ctx, [&] {
    if (d < 1) rittdyn::ThrowPrecondition("iterate count must be >= 1");
    *out = new rd_func{rittdyn::Iterate(f->f, d, ctx->degree_guard)};
  });
}

rd_status rd_func_equal(const rd_func* f, const rd_func* g, int* out) {
  if (!f || !g || !out) return RD_ERR_INVALID_ARGUMENT;
  *out = rittdyn::EqualExact(f->f, g->f) ? 1 : 0;
  return RD_OK;
}

rd_status rd_genus_class_of(rd_context* ctx, const rd_func* f, rd_genus_class* out) {
  if (!ctx || !f || !out) return Fail(ctx, RD_ERR_INVALID_ARGUMENT, "null argument");
  return Guard(ctx, [&] {
    if (f->f.degree() < 2) rittdyn::ThrowPrecondition("genus class needs degree >= 2");
    *out = static_cast<rd_genus_class>(rittdyn::NormalizationGenusClass(f->f));
  });
}

rd_status rd_is_tame(rd_context* ctx, const rd_func* f, uint64_t seed, int* out) {
  if (!ctx || !f || !out) return Fail(ctx, RD_ERR_INVALID_ARGUMENT, "null argument");
  return Guard(ctx, [&] {
    if (f->f.degree() < 2) rittdyn::ThrowPrecondition("tameness needs degree >= 2");
    *out = rittdyn::Tameness(f->f, seed).tame ? 1 : 0;
  });
}

rd_status rd_execute(rd_context* ctx, const char* command, const char* const* keys,
                     const char* const* values, size_t count, int* exit_code, char** json,
                     char** text) {
  if (!ctx || !command || !exit_code || (count && (!keys || !values))) {
    return Fail(ctx, RD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard(ctx, [&] {
    rittdyn::cli::KeyValues kv;
    bool has_seed = false, has_guard = false;
    for (size_t k = 0; k < count; ++k) {
      if (!keys[k] || !values[k]) rittdyn::ThrowPrecondition("null flag");
      kv.emplace_back(keys[k], values[k]);
      has_seed = has_seed || kv.back().first == "seed";
      has_guard = has_guard || kv.back().first == "degree-guard";
    }
    // Context settings act as defaults below explicit flags.
    if (!has_seed && ctx->seed) kv.emplace_back("seed", std::to_string(*ctx->seed));
    if (!has_guard) kv.emplace_back("degree-guard", std::to_string(ctx->degree_guard));
    auto report = rittdyn::cli::Execute(command, kv);
    *exit_code = report.exit_code;
    if (json) *json = Dup(report.json);
    if (text) *text = Dup(report.text);
  });
}

void rd_string_free(char* s) { std::free(s); }

size_t rd_command_count(void) { return rittdyn::cli::Commands().size(); }

const char* rd_command_name(size_t index) {
  const auto& c = rittdyn::cli::Commands();
  return index < c.size() ? c[index].c_str() : nullptr;
}

const char* rd_usage(void) {
  static const std::string usage = rittdyn::cli::Usage();
  return usage.c_str();
}

}  // extern "C"
