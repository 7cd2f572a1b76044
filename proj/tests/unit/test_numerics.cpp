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

#include <algorithm>

#include "rittdyn/error.hpp"
#include "rittdyn/numerics.hpp"
#include "unit/test_util.hpp"

using namespace rittdyn;

namespace {

std::vector<ComplexPoint> StartFiber(const RatFunc& f, Complex w) {
  std::vector<ComplexPoint> out;
  for (Complex z : FiberOf(NumericMap(f), w)) out.push_back({z, 0});
  return out;
}

std::vector<int> CycleType(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

// Independent continuation: resolve the fiber from scratch at many samples
// along the loop and follow each point to its nearest successor.
std::vector<int> BruteForceMonodromy(const RatFunc& f, const LoopPath& loop,
                                     const std::vector<ComplexPoint>& start) {
  NumericMap map(f);
  std::vector<Complex> cur;
  for (const auto& p : start) cur.push_back(p.z);
  const auto& wp = loop.waypoints();
  for (std::size_t k = 0; k + 1 < wp.size(); ++k) {
    for (int s = 1; s <= 200; ++s) {
      Complex w = wp[k] + (wp[k + 1] - wp[k]) * (s / 200.0);
      std::vector<Complex> fiber = FiberOf(map, w);
      std::vector<Complex> next(cur.size());
      std::vector<bool> taken(fiber.size(), false);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        std::size_t best = 0;
        double best_d = 1e300;
        for (std::size_t j = 0; j < fiber.size(); ++j) {
          double d = std::abs(fiber[j] - cur[i]);
          if (!taken[j] && d < best_d) {
            best_d = d;
            best = j;
          }
        }
        taken[best] = true;
        next[i] = fiber[best];
      }
      cur = next;
    }
  }
  std::vector<int> perm(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) {
    double best_d = 1e300;
    for (std::size_t j = 0; j < start.size(); ++j) {
      double d = std::abs(start[j].z - cur[i]);
      if (d < best_d) {
        best_d = d;
        perm[i] = static_cast<int>(j);
      }
    }
  }
  return perm;
}

}  // namespace

TEST_CASE("all_roots examples") {
  auto r = AllRoots(Poly({-1, 0, 1}));
  REQUIRE(r.size() == 2);
  std::sort(r.begin(), r.end(),
            [](const Root& a, const Root& b) { return a.point.z.real() < b.point.z.real(); });
  CHECK(std::abs(r[0].point.z + 1.0) < 1e-12);
  CHECK(std::abs(r[1].point.z - 1.0) < 1e-12);

  Poly p = Poly({0, 1}) * Poly({1, 1}).pow(2) * Poly({2, 5});
  auto q = AllRoots(p);
  REQUIRE(q.size() == 3);
  int total = 0;
  for (const Root& x : q) {
    total += x.multiplicity;
    if (std::abs(x.point.z + 1.0) < 1e-9) CHECK(x.multiplicity == 2);
    else if (std::abs(x.point.z) < 1e-9) CHECK(x.multiplicity == 1);
    else CHECK(std::abs(x.point.z + 0.4) < 1e-12);
  }
  CHECK(total == 4);

  auto c = AllRoots(Poly::Monomial(1, 3));
  REQUIRE(c.size() == 1);
  CHECK(c[0].multiplicity == 3);
  CHECK(std::abs(c[0].point.z) < 1e-15);

  CHECK_THROWS_AS(AllRoots(Poly({5})), Error);
}

TEST_CASE("root residuals stay below tolerance") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = testing::RandomPoly(rng, 3 + trial % 20, -9, 9, trial % 2 == 1);
    for (const Root& r : AllRoots(p)) {
      double scale = 0, pw = 1;
      for (const auto& c : p.coeffs()) {
        scale += std::abs(c.to_complex()) * pw;
        pw *= std::abs(r.point.z);
      }
      CHECK(std::abs(p.eval(r.point.z)) <= 1e-8 * scale);
      CHECK(r.point.error_radius < 1e-6);
    }
  }
}

TEST_CASE("track_fiber examples") {
  RatFunc sq(Poly::Monomial(1, 2));
  Complex base(0.7, 0.3);
  LoopPath around0 = LoopPath::Keyhole(base, 0, 0.25, 0.05);
  auto start = StartFiber(sq, base);
  CHECK(CycleType(TrackFiber(sq, around0, start)) == std::vector<int>{2});

  RatFunc cube(Poly::Monomial(1, 3));
  auto start3 = StartFiber(cube, base);
  CHECK(CycleType(TrackFiber(cube, around0, start3)) == std::vector<int>{3});

  RatFunc t3(testing::ChebyshevByRecurrence(3));
  Complex b3(0.2, 0.9);
  LoopPath around1 = LoopPath::Keyhole(b3, 1.0, 0.3, 0.05);
  auto s3 = StartFiber(t3, b3);
  auto perm = TrackFiber(t3, around1, s3);
  CHECK(CycleType(perm) == std::vector<int>{2, 1});
  CHECK(perm == BruteForceMonodromy(t3, around1, s3));
}

TEST_CASE("contractible and reversed loops") {
  RatFunc t3(testing::ChebyshevByRecurrence(3));
  Complex base(0.2, 0.9);
  auto start = StartFiber(t3, base);
  // Circle around a regular value encloses no branch point.
  LoopPath empty = LoopPath::Keyhole(base, Complex(0.3, 0.3), 0.2, 0.05);
  auto id = TrackFiber(t3, empty, start);
  for (int i = 0; i < 3; ++i) CHECK(id[i] == i);

  LoopPath loop = LoopPath::Keyhole(base, -1.0, 0.4, 0.05);
  auto fwd = TrackFiber(t3, loop, start);
  auto back = TrackFiber(t3, loop.reversed(), start);
  for (int i = 0; i < 3; ++i) CHECK(back[fwd[i]] == i);
}

TEST_CASE("tracking through infinity") {
  // Sheets of (z^2 + 1)/(z - 2) pass through infinity as w circles widely.
  RatFunc f(Poly({1, 0, 1}), Poly({-2, 1}));
  Complex base(0.3, 0.2);
  auto start = StartFiber(f, base);
  LoopPath big = LoopPath::OuterCircle(base, 40.0, 0.5);
  auto perm = TrackFiber(f, big, start);
  CHECK(perm.size() == 2);
  // Infinity is unramified for this f, so the loop at infinity is trivial
  // exactly when the finite branch points have product one.
  CHECK(CycleType(perm) == std::vector<int>{1, 1});
}

TEST_CASE("loop path validation") {
  CHECK_THROWS_AS(LoopPath({0, 1, 2}, 5.0), Error);
  CHECK_THROWS_AS(LoopPath({0, 1, 0}, 0.5), Error);
  CHECK_THROWS_AS(LoopPath::Keyhole(0.1, 0, 0.5, 0.1), Error);
  LoopPath k = LoopPath::Keyhole(Complex(1, 1), 0, 0.2, 0.01);
  CHECK(k.waypoints().front() == k.waypoints().back());
}
