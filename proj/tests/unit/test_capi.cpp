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

// Exercises the shared library through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "rittdyn.h"

namespace {

struct Ctx {
  rd_context* p = nullptr;
  Ctx() { REQUIRE(rd_context_create(&p) == RD_OK); }
  ~Ctx() { rd_context_destroy(p); }
};

struct Func {
  rd_func* p = nullptr;
  ~Func() { rd_func_destroy(p); }
};

std::string Render(const rd_func* f) {
  size_t needed = 0;
  CHECK(rd_func_render(f, nullptr, 0, &needed) == RD_ERR_BUFFER_TOO_SMALL);
  std::string s(needed, '\0');
  CHECK(rd_func_render(f, s.data(), s.size(), &needed) == RD_OK);
  s.resize(needed - 1);
  return s;
}

int Exec(rd_context* ctx, const char* cmd, std::vector<const char*> keys,
         std::vector<const char*> values, std::string* json = nullptr) {
  int code = -1;
  char* out = nullptr;
  REQUIRE(rd_execute(ctx, cmd, keys.data(), values.data(), keys.size(), &code, &out, nullptr) ==
          RD_OK);
  if (json) *json = out;
  rd_string_free(out);
  return code;
}

}  // namespace

TEST_CASE("functions") {
  Ctx ctx;
  Func f, g, h, it;
  REQUIRE(rd_func_parse(ctx.p, "z^2 + 1", &f.p) == RD_OK);
  REQUIRE(rd_func_parse(ctx.p, "z^2", &g.p) == RD_OK);
  CHECK(rd_func_degree(f.p) == 2);
  CHECK(Render(f.p) == "z^2 + 1");
  REQUIRE(rd_func_compose(ctx.p, f.p, g.p, &h.p) == RD_OK);
  CHECK(Render(h.p) == "z^4 + 1");
  REQUIRE(rd_func_iterate(ctx.p, f.p, 2, &it.p) == RD_OK);
  CHECK(Render(it.p) == "z^4 + 2*z^2 + 2");
  int eq = -1;
  CHECK(rd_func_equal(f.p, g.p, &eq) == RD_OK);
  CHECK(eq == 0);
  rd_func* copy = rd_func_clone(f.p);
  CHECK(rd_func_equal(f.p, copy, &eq) == RD_OK);
  CHECK(eq == 1);
  rd_func_destroy(copy);
  rd_func* bad = nullptr;
  CHECK(rd_func_iterate(ctx.p, f.p, 0, &bad) == RD_ERR_PRECONDITION);
  CHECK(bad == nullptr);
  CHECK(std::strlen(rd_context_last_error(ctx.p)) > 0);
}

TEST_CASE("errors") {
  Ctx ctx;
  Func f;
  CHECK(rd_func_parse(ctx.p, "z^2+*3", &f.p) == RD_ERR_SYNTAX);
  CHECK(f.p == nullptr);
  CHECK(rd_context_last_error_offset(ctx.p) == 4);
  CHECK(std::string(rd_context_last_error(ctx.p)).find("byte 4") != std::string::npos);
  CHECK(rd_func_parse(ctx.p, "z/0", &f.p) == RD_ERR_SYNTAX);
  CHECK(rd_func_parse(ctx.p, "z", &f.p) == RD_OK);
  CHECK(rd_context_last_error_offset(ctx.p) == SIZE_MAX);
  CHECK(std::string(rd_context_last_error(ctx.p)).empty());
  CHECK(rd_func_parse(ctx.p, nullptr, &f.p) == RD_ERR_INVALID_ARGUMENT);
  CHECK(rd_func_parse(nullptr, "z", &f.p) == RD_ERR_INVALID_ARGUMENT);
  CHECK(rd_context_create(nullptr) == RD_ERR_INVALID_ARGUMENT);
  CHECK(rd_func_degree(nullptr) == -1);
  CHECK(rd_context_set_degree_guard(ctx.p, 8) == RD_OK);
  CHECK(rd_func_parse(ctx.p, "z^9", &f.p) == RD_ERR_PRECONDITION);
  rd_context_destroy(nullptr);
  rd_func_destroy(nullptr);
  CHECK(std::string(rd_status_string(RD_ERR_NUMERIC)) == "numeric");
}

TEST_CASE("analysis") {
  Ctx ctx;
  Func a, z2, j;
  REQUIRE(rd_func_parse(ctx.p, "a_23", &a.p) == RD_OK);
  REQUIRE(rd_func_parse(ctx.p, "z^2", &z2.p) == RD_OK);
  REQUIRE(rd_func_parse(ctx.p, "z + 1/z", &j.p) == RD_OK);
  rd_genus_class gc;
  CHECK(rd_genus_class_of(ctx.p, a.p, &gc) == RD_OK);
  CHECK(gc == RD_GENUS_GREATER_THAN_ONE);
  CHECK(rd_genus_class_of(ctx.p, z2.p, &gc) == RD_OK);
  CHECK(gc == RD_GENUS_ZERO);
  int tame = -1;
  CHECK(rd_is_tame(ctx.p, j.p, 0, &tame) == RD_OK);
  CHECK(tame == 0);
  CHECK(rd_is_tame(ctx.p, a.p, 0, &tame) == RD_OK);
  CHECK(tame == 0);
}

TEST_CASE("execute") {
  Ctx ctx;
  CHECK(rd_command_count() == 12);
  CHECK(std::string(rd_command_name(0)) == "info");
  CHECK(rd_command_name(99) == nullptr);
  CHECK(std::string(rd_usage()).find("usage") == 0);

  std::string json;
  CHECK(Exec(ctx.p, "bounds", {"n", "m"}, {"3", "6"}, &json) == 0);
  CHECK(json.find("\"genus_bound\": \"-83/84\"") != std::string::npos);
  CHECK(Exec(ctx.p, "nope", {}, {}) == 64);
  CHECK(Exec(ctx.p, "tame", {"arg"}, {"z^2+*3"}) == 1);
  CHECK(Exec(ctx.p, "tame", {"arg", "shade"}, {"z^2", "x"}) == 64);

  REQUIRE(rd_context_set_seed(ctx.p, 42) == RD_OK);
  CHECK(Exec(ctx.p, "bounds", {"n", "m"}, {"3", "6"}, &json) == 0);
  CHECK(json.find("\"seed\": 42") != std::string::npos);
  CHECK(Exec(ctx.p, "bounds", {"n", "m", "seed"}, {"3", "6", "5"}, &json) == 0);
  CHECK(json.find("\"seed\": 5") != std::string::npos);

  int code = 0;
  char* text = nullptr;
  const char* keys[] = {"arg"};
  const char* values[] = {"lattes5"};
  REQUIRE(rd_execute(ctx.p, "special", keys, values, 1, &code, nullptr, &text) == RD_OK);
  CHECK(std::string(text).find("lattes_candidate") != std::string::npos);
  rd_string_free(text);
  CHECK(rd_execute(ctx.p, "special", nullptr, nullptr, 1, &code, nullptr, nullptr) ==
        RD_ERR_INVALID_ARGUMENT);
}
