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

#include <random>

#include "rittdyn/error.hpp"
#include "rittdyn/monodromy.hpp"
#include "unit/test_util.hpp"

using namespace rittdyn;
using rittdyn::testing::ChebyshevByRecurrence;

namespace {

RatFunc Z(int n) { return RatFunc(Poly::Monomial(1, n)); }
RatFunc T(int n) { return RatFunc(ChebyshevByRecurrence(n)); }
RatFunc A23() { return RatFunc(Poly({0, 0, 1}) * Poly({1, 1}).pow(3)); }

SpherePoint At(long v) { return SpherePoint::FromExact({false, GaussianRational(v)}); }

std::vector<int> TypeAt(const MonodromyData& m, const SpherePoint& p) {
  for (std::size_t k = 0; k < m.branch_points.size(); ++k) {
    if (m.branch_points[k].SameAs(p, 1e-9)) return CycleType(m.permutations[k]);
  }
  return {};
}

// Naive continuation: re-solve the fiber at many samples and follow
// nearest neighbours.
Permutation Naive(const RatFunc& f, const LoopPath& loop, std::vector<Complex> cur) {
  NumericMap map(f);
  std::vector<Complex> start = cur;
  const auto& wp = loop.waypoints();
  for (std::size_t k = 0; k + 1 < wp.size(); ++k) {
    for (int s = 1; s <= 100; ++s) {
      Complex w = wp[k] + (wp[k + 1] - wp[k]) * (s / 100.0);
      auto fiber = FiberOf(map, w);
      std::vector<Complex> next;
      for (Complex z : cur) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < fiber.size(); ++j) {
          if (std::abs(fiber[j] - z) < std::abs(fiber[best] - z)) best = j;
        }
        next.push_back(fiber[best]);
      }
      cur = next;
    }
  }
  Permutation p;
  for (Complex z : cur) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < start.size(); ++j) {
      if (std::abs(start[j] - z) < std::abs(start[best] - z)) best = j;
    }
    p.push_back(static_cast<int>(best));
  }
  return p;
}

void CheckGates(const RatFunc& f, const MonodromyData& m) {
  CHECK(m.CheckProductOne() == "");
  CHECK(m.CheckTransitive() == "");
  CHECK(m.CheckCycleTypes(ComputePortrait(f), 1e-6) == "");
}

}  // namespace

TEST_CASE("permutation helpers") {
  Permutation a{1, 2, 0, 3}, b{1, 0, 2, 3};
  // First a, then b.
  CHECK(Multiply(a, b) == Permutation{0, 2, 1, 3});
  CHECK(IsIdentity(Multiply(a, Inverse(a))));
  CHECK(CycleType(a) == std::vector<int>{3, 1});
  CHECK(CycleString(a) == "(1 2 3)(4)");
  CHECK(Orbits(4, {b}).size() == 3);
}

TEST_CASE("group order") {
  mpz_class cap("1000000000000000000000");
  CHECK(*GroupOrder(5, {{1, 2, 3, 4, 0}}, cap) == 5);
  // Dihedral group of the square.
  CHECK(*GroupOrder(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, cap) == 8);
  // A_5 from two 3-cycles and a 5-cycle.
  CHECK(*GroupOrder(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, cap) == 60);
  // S_n from a transposition and an n-cycle.
  for (int n = 2; n <= 12; ++n) {
    Permutation cyc(n), tr = IdentityPermutation(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    std::swap(tr[0], tr[1]);
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(*GroupOrder(n, {cyc, tr}, cap) == fact);
  }
  Permutation cyc(30), tr = IdentityPermutation(30);
  for (int i = 0; i < 30; ++i) cyc[i] = (i + 1) % 30;
  std::swap(tr[0], tr[1]);
  CHECK_FALSE(GroupOrder(30, {cyc, tr}, mpz_class(1000000)).has_value());
  CHECK(*GroupOrder(3, {}, cap) == 1);
}

TEST_CASE("monodromy of z^n") {
  for (int n = 2; n <= 6; ++n) {
    auto m = Monodromy(Z(n), std::nullopt, 0);
    REQUIRE(m.permutations.size() == 2);
    CHECK(CycleType(m.permutations[0]) == std::vector<int>{n});
    CHECK(CycleType(m.permutations[1]) == std::vector<int>{n});
    CHECK(m.branch_points.back().infinite);
    CheckGates(Z(n), m);
    CHECK(*GroupOrder(m, 1000) == n);
  }
}

TEST_CASE("monodromy of T3") {
  auto m = Monodromy(T(3), std::nullopt, 0);
  REQUIRE(m.permutations.size() == 3);
  CHECK(TypeAt(m, At(1)) == std::vector<int>{2, 1});
  CHECK(TypeAt(m, At(-1)) == std::vector<int>{2, 1});
  CHECK(TypeAt(m, SpherePoint::Infinity()) == std::vector<int>{3});
  CheckGates(T(3), m);
  CHECK(*GroupOrder(m, 1000) == 6);

  // Same loops traced by naive continuation.
  for (std::size_t k = 0; k + 1 < m.branch_points.size(); ++k) {
    LoopPath loop = LoopPath::Keyhole(m.base_point.z, m.branch_points[k].approx, 0.3, 0.05);
    CHECK(Naive(T(3), loop, m.fiber_labels) == m.permutations[k]);
  }
}

TEST_CASE("monodromy of A23") {
  auto m = Monodromy(A23(), std::nullopt, 0);
  auto portrait = ComputePortrait(A23());
  std::vector<std::vector<int>> types;
  for (const auto& p : m.permutations) types.push_back(CycleType(p));
  std::sort(types.begin(), types.end());
  CHECK(types == std::vector<std::vector<int>>{{2, 1, 1, 1}, {3, 2}, {5}});
  CheckGates(A23(), m);
  auto order = GroupOrder(m, 1000);
  REQUIRE(order);
  CHECK(*order % 5 == 0);
  CHECK(120 % *order == 0);
}

TEST_CASE("extra points give identity loops") {
  std::vector<SpherePoint> set{At(1), At(-1), SpherePoint::Infinity(), At(3),
                               SpherePoint::Numeric(Complex(0.5, 2))};
  auto m = Monodromy(T(3), set, 1);
  CHECK(m.permutations.size() == 5);
  CHECK(IsIdentity(m.permutations[m.branch_points.size() - 1]) == false);
  CHECK(TypeAt(m, At(3)) == std::vector<int>{1, 1, 1});
  CheckGates(T(3), m);
  CHECK_THROWS_AS(Monodromy(T(3), std::vector<SpherePoint>{At(1)}, 0), Error);
}

TEST_CASE("seed changes relabel but keep invariants") {
  auto a = Monodromy(A23(), std::nullopt, 0);
  auto b = Monodromy(A23(), std::nullopt, 17);
  auto portrait = ComputePortrait(A23());
  for (const auto& bp : portrait.branch_points) {
    CHECK(TypeAt(a, bp.value) == TypeAt(b, bp.value));
  }
  CHECK(*GroupOrder(a, 10000) == *GroupOrder(b, 10000));
  auto again = Monodromy(A23(), std::nullopt, 0);
  CHECK(again.permutations == a.permutations);
  CHECK(again.base_point.z == a.base_point.z);
}

TEST_CASE("shared monodromy uses one base") {
  auto ms = SharedMonodromy({Z(2), Z(3)}, 0);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].base_point.z == ms[1].base_point.z);
  CHECK(ms[0].branch_points.size() == ms[1].branch_points.size());
  CheckGates(Z(2), ms[0]);
  CheckGates(Z(3), ms[1]);
  auto ts = SharedMonodromy({T(3), T(3)}, 4);
  CHECK(ts[0].permutations == ts[1].permutations);
}

TEST_CASE("random functions satisfy the gates") {
  std::mt19937_64 rng(7);
  int full = 0;
  for (int trial = 0; trial < 12; ++trial) {
    int d = 2 + trial % 4;
    RatFunc f = trial % 3 ? testing::RandomRatFunc(rng, d) : testing::RandomPolyFunc(rng, d);
    auto m = Monodromy(f, std::nullopt, trial);
    CheckGates(f, m);
    auto order = GroupOrder(m, 1000000);
    REQUIRE(order);
    mpz_class fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    CHECK(fact % *order == 0);
    CHECK(*order % d == 0);
    auto portrait = ComputePortrait(f);
    bool simple = true;
    for (const auto& bp : portrait.branch_points) {
      simple = simple && bp.partition[0] == 2 && bp.partition.size() == std::size_t(d - 1);
    }
    if (d == 4 && simple) {
      CHECK(*order == 24);
      ++full;
    }
  }
  CHECK(full > 0);
}
