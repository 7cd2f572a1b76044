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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rittdyn/cli.hpp"
#include "rittdyn/dynamics.hpp"
#include "rittdyn/expr.hpp"
#include "unit/test_util.hpp"

using namespace rittdyn;
using nlohmann::json;

namespace {

RatFunc F(const char* s) { return ParseFunction(s); }
RatFunc C(long v) { return RatFunc::Constant(v); }

std::size_t OffsetOf(const char* s) {
  try {
    ParseFunction(s);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

json Run(const std::string& cmd, const cli::KeyValues& kv, int* code = nullptr) {
  auto r = cli::Execute(cmd, kv);
  if (code) *code = r.exit_code;
  return json::parse(r.json);
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(F("z^2*(z+1)^3") == RatFunc(Poly({0, 0, 1}) * Poly({1, 1}).pow(3)));
  CHECK(F("T(6)") == RatFunc(testing::ChebyshevByRecurrence(6)));
  CHECK(F("(z^2+1)/(2*z)") == DMap(1));
  CHECK(F("D(3)") == F("(z^3 + z^-3)/2"));
  CHECK(F("pow(-2)") == F("1/z^2"));
  CHECK(F("a_23") == F("z^2*(z+1)^3"));
  CHECK(F("a_23 + 1") == F("z^2*(z+1)^3 + 1"));
  CHECK(F("(1+2*i)*z - i") == RatFunc(Poly(std::vector<GaussianRational>{
                                  -GaussianRational::I(), GaussianRational(1, 2)})));
}

TEST_CASE("precedence and associativity") {
  CHECK(F("-z^2") == RatFunc(Poly({0, 0, -1})));
  CHECK(F("-2^2") == C(-4));
  CHECK(F("2^3^2") == C(512));
  CHECK(F("z^-2") == F("1/(z*z)"));
  CHECK(F("z^(1+1)") == F("z*z"));
  CHECK(F("1 - 2 - 3") == C(-4));
  CHECK(F("12/3/2") == C(2));
  CHECK(F("2*z^2/4") == F("z^2/2"));
  CHECK(F("--z") == F("z"));
  CHECK(F("(-z)^2") == F("z^2"));
  CHECK(F("  z  +  1 ") == F("z+1"));
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK(OffsetOf("z^2+*3") == 4);
  CHECK(OffsetOf("(z+1") == 4);
  CHECK(OffsetOf("z^(1/2)") == 2);
  CHECK(OffsetOf("z^z") == 2);
  CHECK(OffsetOf("z/0") == 1);
  CHECK(OffsetOf("0^-1") == 1);
  CHECK(OffsetOf("foo + z") == 0);
  CHECK(OffsetOf("z + ") == 4);
  CHECK(OffsetOf("") == 0);
  CHECK(OffsetOf("T(0)") == 2);
  CHECK(OffsetOf("z^1.5") == 3);
  CHECK(OffsetOf("z ) ") == 2);
  CHECK(OffsetOf("z\xc3\xa9") == 1);
  CHECK_THROWS_AS(ParseFunction("z^4000"), Error);
  CHECK_THROWS_AS(ParseFunction("z^40", 16), Error);
}

TEST_CASE("render round trip") {
  for (const auto& e : BuiltinCorpus()) {
    Expr tree = ParseExpr(e.expr);
    std::string text = RenderExpr(tree);
    CHECK_MESSAGE(ParseExpr(text) == tree, text);
    RatFunc f = EvaluateExpr(tree);
    CHECK(EqualExact(ParseFunction(text), f));
    CHECK(EqualExact(ParseFunction(f.ToString()), f));
  }
  for (const char* s : {"-(z + 1)^-3", "z - (1 - z)", "1/(2/z)", "(z^2)^3", "-z*-z", "2^3^2",
                        "(z + i)/(z - i)^2 - -3"}) {
    Expr tree = ParseExpr(s);
    CHECK_MESSAGE(ParseExpr(RenderExpr(tree)) == tree, s);
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    RatFunc f = testing::RandomRatFunc(rng, 1 + t % 6, -9, 9);
    CHECK(ParseFunction(f.ToString()) == f);
  }
}

TEST_CASE("corpus") {
  std::ifstream in(std::string(RITTDYN_SOURCE_DIR) + "/data/corpus.txt");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == BuiltinCorpusText());
  std::set<std::string> names;
  for (const auto& e : BuiltinCorpus()) {
    CHECK(names.insert(e.name).second);
    CHECK(ParseFunction(e.expr).degree() >= 2);
  }
  for (const char* n : {"a_23", "t6", "lattes4", "lattes5"}) CHECK(names.count(n));
  CHECK(F("lattes5") == MakeFamily(FamilyKind::kLattesSample));
  CHECK(F("lattes4") == MakeFamily(FamilyKind::kLattesDoubling));
  auto parsed = ParseCorpus("# c\n\nx  z^2 + 1   # note\n");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].expr == "z^2 + 1");
}

TEST_CASE("points") {
  CHECK(ParsePoint("inf") == ExactPoint::Infinity());
  CHECK(ParsePoint(" 1/2 + i ") == ExactPoint{false, GaussianRational(mpq_class(1, 2), 1)});
  CHECK(ParsePoint("-3") == ExactPoint{false, GaussianRational(-3)});
  CHECK_THROWS_AS(ParsePoint("z"), Error);
}

TEST_CASE("exit codes") {
  int code = 0;
  Run("frobnicate", {}, &code);
  CHECK(code == cli::kExitUsage);
  Run("tame", {{"arg", "z^2"}, {"colour", "red"}}, &code);
  CHECK(code == cli::kExitUsage);
  Run("orbit", {{"arg", "z^2"}, {"horizon", "ten"}}, &code);
  CHECK(code == cli::kExitUsage);
  Run("tame", {}, &code);
  CHECK(code == cli::kExitPrecondition);
  json j = Run("tame", {{"arg", "z^2+*3"}}, &code);
  CHECK(code == cli::kExitPrecondition);
  CHECK(j["error"]["kind"] == "syntax");
  CHECK(j["error"]["offset"] == 4);
  Run("tame", {{"arg", "z + 1"}}, &code);
  CHECK(code == cli::kExitPrecondition);
  Run("bounds", {{"n", "3"}, {"m", "6"}}, &code);
  CHECK(code == cli::kExitOk);
}

TEST_CASE("report contents") {
  json t = Run("tame", {{"arg", "z^2*(z+1)^3"}});
  CHECK(t["schema"] == 1);
  CHECK(t["results"]["verdict"] == "wild");
  CHECK(t["results"]["genera"] == json({0, 0}));
  CHECK(t["inputs"]["A"]["canonical"] == "z^5 + 3*z^4 + 3*z^3 + z^2");
  json b = Run("bounds", {{"n", "3"}, {"m", "6"}});
  CHECK(b["results"]["genus_bound"] == "-83/84");
  CHECK(b["results"]["c1"] == "504");
  CHECK(std::abs(b["results"]["c2"].get<double>() - 9.977) < 1e-3);
  json x = Run("intersect", {{"A", "z^2"}, {"B", "z^4"}, {"x1", "2"}, {"x2", "2"}, {"horizon", "8"}});
  std::vector<std::pair<int, int>> kl;
  for (const auto& m : x["results"]["matches"]) kl.emplace_back(m["k"], m["l"]);
  CHECK(kl == std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}});
  CHECK(x["results"]["matches"][1]["point"] == "16");
  json s = Run("special", {{"arg", "(z^2+1)^2/(4*z*(z^2-1))"}});
  CHECK(s["results"]["class"] == "lattes_candidate");
  json o = Run("orbit", {{"arg", "z^2-1"}, {"x1", "0"}});
  CHECK(o["results"]["preperiodic"]["period"] == 2);
  json ci = Run("common-iterate", {{"A", "T(2)"}, {"B", "T(3)"}});
  CHECK(ci["results"]["witness"].is_null());
  json in = Run("info", {{"arg", "a_23"}});
  CHECK(in["results"]["chi"] == "-2/15");
  CHECK(in["results"]["target_signature"] == json({6, 5, 2}));
}

TEST_CASE("seeds") {
  unsetenv("RITTDYN_SEED");
  CHECK(cli::ResolveSeed(std::nullopt) == 0);
  setenv("RITTDYN_SEED", "77", 1);
  CHECK(cli::ResolveSeed(std::nullopt) == 77);
  CHECK(cli::ResolveSeed(5) == 5);
  CHECK(Run("bounds", {{"n", "3"}, {"m", "4"}})["seed"] == 77);
  CHECK(Run("bounds", {{"n", "3"}, {"m", "4"}, {"seed", "9"}})["seed"] == 9);
  setenv("RITTDYN_SEED", "junk", 1);
  CHECK(cli::ResolveSeed(std::nullopt) == 0);
  unsetenv("RITTDYN_SEED");
}

TEST_CASE("identical invocations give identical reports") {
  const std::vector<std::pair<std::string, cli::KeyValues>> runs = {
      {"info", {{"arg", "rat4"}}},
      {"tame", {{"arg", "rat3"}}},
      {"curve", {{"arg", "rat2"}, {"arg", "z^3"}}},
      {"decompose", {{"arg", "rat6"}}},
      {"stabilize", {{"arg", "quad1"}, {"dmax", "3"}}},
      {"equiv", {{"arg", "t6"}}},
      {"special", {{"arg", "lattes5"}}},
      {"monodromy", {{"arg", "a_23"}}},
      {"orbit", {{"arg", "quad1"}, {"x1", "0"}}},
      {"intersect", {{"A", "z^2"}, {"B", "z^3"}, {"x1", "2"}, {"x2", "2"}}},
      {"common-iterate", {{"A", "quad1"}, {"B", "quad1_2"}}},
      {"bounds", {{"A", "rat3"}, {"B", "rat2"}}},
  };
  CHECK(runs.size() == cli::Commands().size());
  for (const auto& [cmd, kv] : runs) {
    auto seeded = kv;
    seeded.emplace_back("seed", "11");
    int c1 = 0, c2 = 0;
    json a = Run(cmd, seeded, &c1), b = Run(cmd, seeded, &c2);
    a.erase("timing");
    b.erase("timing");
    CHECK_MESSAGE(c1 == cli::kExitOk, cmd);
    CHECK_MESSAGE(a == b, cmd);
    CHECK(c1 == c2);
  }
}
