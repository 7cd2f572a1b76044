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

#include "rittdyn/error.hpp"
#include "rittdyn/ratfunc.hpp"
#include "unit/test_util.hpp"

using namespace rittdyn;
using rittdyn::testing::ChebyshevByRecurrence;
using rittdyn::testing::RandomRatFunc;

namespace {

RatFunc Z(int n) { return RatFunc(Poly::Monomial(1, n)); }
RatFunc T(int n) { return RatFunc(ChebyshevByRecurrence(n)); }
RatFunc A23() { return RatFunc(Poly({0, 0, 1}) * Poly({1, 1}).pow(3)); }

}  // namespace

TEST_CASE("gaussian rationals") {
  GaussianRational a(mpq_class(1, 2), mpq_class(-3, 4));
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(GaussianRational::I().pow(2) == GaussianRational(-1));
  CHECK(a.ToString() == "1/2-3/4*i");
  CHECK(GaussianRational::FromString(a.ToString()) == a);
  CHECK(GaussianRational::FromString("i") == GaussianRational::I());
  CHECK(GaussianRational::FromString("-7/3") == GaussianRational(mpq_class(-7, 3)));
  CHECK_FALSE(GaussianRational::FromString("1/0").has_value());
  CHECK_FALSE(GaussianRational::FromString("abc").has_value());
  auto roots = ExactRoots(GaussianRational(mpq_class(-8, 27)), 3);
  CHECK(roots.size() == 1);
  CHECK(roots[0] == GaussianRational(mpq_class(-2, 3)));
  CHECK(ExactRoots(GaussianRational(2), 2).empty());
  CHECK(ExactRoots(GaussianRational(-1), 2).size() == 2);
}

TEST_CASE("polynomial arithmetic") {
  Poly p({1, 2, 1});  // (z+1)^2
  CHECK(p == Poly({1, 1}).pow(2));
  auto [q, r] = DivMod(p, Poly({1, 1}));
  CHECK(q == Poly({1, 1}));
  CHECK(r.is_zero());
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK(Gcd(Poly({-1, 0, 1}), Poly({1, 2, 1})) == Poly({1, 1}));
  // z (z+1)^3 (z-2)^2
  Poly f = Poly({0, 1}) * Poly({1, 1}).pow(3) * Poly({-2, 1}).pow(2);
  auto sqf = SquarefreeDecomposition(f);
  REQUIRE(sqf.size() == 3);
  CHECK(sqf[0] == Poly({0, 1}));
  CHECK(sqf[1] == Poly({-2, 1}));
  CHECK(sqf[2] == Poly({1, 1}));
}

TEST_CASE("compose examples") {
  CHECK(Compose(Z(2), Z(3)) == Z(6));
  CHECK(Compose(T(2), T(3)) == T(6));
  CHECK(T(2) == RatFunc(Poly({-1, 0, 2})));
  CHECK(T(3) == RatFunc(Poly({0, -3, 0, 4})));
  // A_{2,3} o X = A_{2,3} o Z with X = (1 - z^2)/(z^5 - 1), Z = z^3 X.
  RatFunc x(Poly({1, 0, -1}), Poly({-1, 0, 0, 0, 0, 1}));
  RatFunc zz = RatFunc(Poly({0, 0, 0, 1}) * x.num(), x.den());
  CHECK(Compose(A23(), x) == Compose(A23(), zz));
  CHECK_THROWS_AS(Compose(RatFunc::Constant(1), Z(2)), Error);
}

TEST_CASE("iterate examples") {
  CHECK(Iterate(Z(2), 3) == Z(8));
  RatFunc f(Poly({1, 0, 1}));
  CHECK(Iterate(f, 2) == RatFunc(Poly({2, 0, 2, 0, 1})));
  CHECK(Iterate(f, 1) == f);
  try {
    Iterate(Z(2), 11);
    FAIL("expected guard refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
    CHECK(std::string(e.what()).find("2048") != std::string::npos);
  }
  CHECK(Iterate(Z(2), 11, 4096).degree() == 2048);
}

TEST_CASE("conjugate examples") {
  Mobius shift(1, 1, 0, 1);  // z + 1
  CHECK(Conjugate(Z(2), shift) == RatFunc(Poly({0, 2, 1})));
  CHECK(Conjugate(T(3), Mobius()) == T(3));
  GaussianRational c(mpq_class(1, 2));
  RatFunc scaled = Conjugate(T(3), Mobius(c, 0, 0, 1));
  // c^{-1}(4 (c z)^3 - 3 c z) = 4 c^2 z^3 - 3 z
  CHECK(scaled.num().coeff(1) == GaussianRational(-3));
  CHECK(scaled.num().coeff(3) == GaussianRational(1));
  CHECK_THROWS_AS(Mobius(1, 2, 2, 4), Error);
}

TEST_CASE("equal_exact examples") {
  CHECK(EqualExact(Z(6), Compose(Z(2), Z(3))));
  CHECK_FALSE(EqualExact(RatFunc(Poly({0, 1, 0, 1})), T(3)));
  RatFunc halves(Poly({-2, 0, 2}), Poly({2}));
  CHECK(EqualExact(halves, RatFunc(Poly({-1, 0, 1}))));
}

TEST_CASE("derivative examples") {
  CHECK(Derivative(Z(5)) == RatFunc(Poly::Monomial(5, 4)));
  RatFunc expected(Poly({0, 1}) * Poly({1, 1}).pow(2) * Poly({2, 5}));
  CHECK(Derivative(A23()) == expected);
  RatFunc inv(Poly({1}), Poly({0, 1}));
  CHECK(Derivative(inv) == RatFunc(Poly({-1}), Poly({0, 0, 1})));
}

TEST_CASE("canonical form") {
  RatFunc f(Poly({2, 2}), Poly({4, 4, 0}) * Poly({0, 1}));
  // (2z + 2) / ((4z + 4) z) = (1/2) / z with a monic denominator.
  CHECK(f.num() == Poly::Constant(GaussianRational(mpq_class(1, 2))));
  CHECK(f.den() == Poly({0, 1}));
  RatFunc g(Poly({-6, 0, 6}), Poly({3, 3}));  // 2(z - 1)
  CHECK(g == RatFunc(Poly({-2, 2})));
  CHECK(RatFunc(g.num(), g.den()) == g);
}

TEST_CASE("properties on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    RatFunc f = RandomRatFunc(rng, 2), g = RandomRatFunc(rng, 2),
            h = RandomRatFunc(rng, 1 + trial % 2);
    CHECK(Compose(Compose(f, g), h) == Compose(f, Compose(g, h)));
    CHECK(Compose(f, h).degree() == f.degree() * h.degree());
    CHECK(Iterate(f, 3) == Compose(Iterate(f, 1), Iterate(f, 2)));
    Mobius mu(1 + trial % 3, trial % 2, trial % 4 == 0 ? 1 : 0, 1);
    CHECK(Conjugate(Conjugate(f, mu), mu.inverse()) == f);
    RatFunc again(f.num() * 3, f.den() * 3);
    CHECK(again == f);
  }
}
