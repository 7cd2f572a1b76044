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

// Acceptance run: one PASS/FAIL line per criterion with its wall time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rittdyn/cli.hpp"
#include "rittdyn/decomp.hpp"
#include "rittdyn/dynamics.hpp"
#include "rittdyn/expr.hpp"
#include "rittdyn/fiberprod.hpp"
#include "rittdyn/monodromy.hpp"
#include "rittdyn/orbifold.hpp"
#include "unit/test_util.hpp"

using namespace rittdyn;

namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t k = 0; k < failures_.size() && k < 3; ++k) s += (k ? "; " : "") + failures_[k];
    if (failures_.size() > 3) s += "; +" + std::to_string(failures_.size() - 3) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

RatFunc A23() { return RatFunc(Poly({0, 0, 1}) * Poly({1, 1}).pow(3)); }

std::vector<int> Genera(const std::vector<FiberComponent>& cs) {
  std::vector<int> g;
  for (const auto& c : cs) g.push_back(c.genus);
  std::sort(g.begin(), g.end());
  return g;
}

void DegreeTwoWild(Checker& check) {
  std::mt19937_64 rng(20260101);
  for (int t = 0; t < 20; ++t) {
    RatFunc f = testing::RandomRatFunc(rng, 2, -3, 3, true);
    auto r = Tameness(f, t);
    bool genus0 = std::any_of(r.components.begin(), r.components.end(),
                              [](const FiberComponent& c) { return !c.is_diagonal && c.genus == 0; });
    check(!r.tame && genus0, "degree-2 function " + f.ToString() + " not shown wild");
  }
}

void WorkedExample(Checker& check) {
  RatFunc A = A23();
  RatFunc X(Poly({1, 0, -1}), Poly({-1, 0, 0, 0, 0, 1}));
  RatFunc Z(Poly::Monomial(1, 3) * X.num(), X.den());
  check(EqualExact(Compose(A, X), Compose(A, Z)), "A o X != A o Z");
  check(EqualExact(Z, Compose(X, PowerMap(-1))), "Z != X o 1/z");
  Orbifold target = TargetOrbifold(ComputePortrait(A));
  check(target.signature() == Signature{6, 5, 2}, "signature " + SignatureToString(target.signature()));
  check(EulerCharacteristic(target) == mpq_class(-2, 15), "chi " + EulerCharacteristic(target).get_str());
  check(NormalizationGenusClass(A) == GenusClass::kGreaterThanOne, "normalization class");
  auto cs = CurveComponents(A, A, 0);
  int diag = 0, other = 0;
  for (const auto& c : cs) {
    if (c.is_diagonal) {
      ++diag;
    } else {
      ++other;
      check(c.genus == 0 && c.total_degree == 20, "non-diagonal component genus/degree");
    }
  }
  check(diag == 1 && other == 1, "component count " + std::to_string(cs.size()));
}

void Classifier(Checker& check) {
  for (int n = 2; n <= 8; ++n) {
    check(NormalizationGenusClass(PowerMap(n)) == GenusClass::kZero, "z^" + std::to_string(n));
    check(NormalizationGenusClass(Chebyshev(n)) == GenusClass::kZero, "T_" + std::to_string(n));
  }
  RatFunc lat = MakeFamily(FamilyKind::kLattesSample);
  check(NormalizationGenusClass(lat) == GenusClass::kOne, "Lattes class");
  check(TargetOrbifold(ComputePortrait(lat)).signature() == Signature{2, 2, 2, 2}, "Lattes signature");
  check(NormalizationGenusClass(A23()) == GenusClass::kGreaterThanOne, "A_{2,3} class");
}

void MonodromyGates(Checker& check) {
  int tested = 0;
  for (const auto& e : BuiltinCorpus()) {
    RatFunc f = ParseFunction(e.expr);
    if (f.degree() > 8) continue;
    ++tested;
    auto m = Monodromy(f, std::nullopt, 0);
    auto portrait = ComputePortrait(f);
    check(m.CheckProductOne().empty(), e.name + ": product one");
    check(m.CheckTransitive().empty(), e.name + ": transitivity");
    check(m.CheckCycleTypes(portrait, 1e-6).empty(), e.name + ": cycle types");
  }
  check(tested >= 20, "corpus too small");
  mpz_class cap("1000000000000");
  for (int n = 2; n <= 8; ++n) {
    auto order = GroupOrder(Monodromy(PowerMap(n), std::nullopt, 0), cap);
    check(order && *order == n, "group order of z^" + std::to_string(n));
  }
  auto t3 = GroupOrder(Monodromy(Chebyshev(3), std::nullopt, 0), cap);
  check(t3 && *t3 == 6, "group order of T_3");
}

void Decomposition(Checker& check) {
  auto expect_two = [&](const Poly& f, const char* name) {
    auto classes = PolyDecompose(f);
    std::vector<int> degs;
    bool exact = true;
    for (const auto& c : classes) {
      degs.push_back(c.V.degree());
      exact = exact && EqualExact(Compose(c.U, c.V), RatFunc(f));
    }
    std::sort(degs.begin(), degs.end());
    check(degs == std::vector<int>{2, 3} && exact, std::string(name) + " classes");
  };
  expect_two(PowerMap(6).num(), "z^6");
  expect_two(Chebyshev(6).num(), "T_6");

  auto Zp = [](int n) { return Poly::Monomial(1, n); };
  auto Tp = [](int n) { return Chebyshev(n).num(); };
  std::vector<std::array<Poly, 4>> cases = {{Zp(2), Zp(3), Zp(3), Zp(2)},
                                            {Zp(4), Zp(6), Zp(6), Zp(4)},
                                            {Tp(2), Tp(6), Tp(4), Tp(3)}};
  std::mt19937_64 rng(77);
  for (int t = 0; t < 7; ++t) {
    int n = 2 + t % 2, r = 1 + 2 * (t % 2);
    Poly h = testing::RandomPoly(rng, 1, 1, 3, false);
    Poly U = testing::RandomPoly(rng, 1 + t % 2, -2, 2, false);
    Poly V = testing::RandomPoly(rng, 1 + (t + 1) % 2, -2, 2, false);
    Poly left = Zp(r) * h.pow(n), right = Zp(r) * h.compose(Zp(n));
    cases.push_back({U.compose(Zp(n)), right.compose(V), U.compose(left), Zp(n).compose(V)});
  }
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& [A, C, D, B] = cases[k];
    auto s = EngstromSplit(A, C, D, B);
    bool ok = s.U.compose(s.A1) == A && s.U.compose(s.D1) == D && s.C1.compose(s.V) == C &&
              s.B1.compose(s.V) == B && s.A1.compose(s.C1) == s.D1.compose(s.B1) &&
              s.U.degree() == std::gcd(A.degree(), D.degree());
    check(ok, "engstrom instance " + std::to_string(k));
  }

  std::mt19937_64 rng2(78);
  for (int t = 0; t < 20; ++t) {
    RatFunc D = testing::RandomPolyFunc(rng2, 2 + t % 3, -3, 3, t % 2);
    RatFunc R = testing::RandomPolyFunc(rng2, 2 + (t / 3) % 2, -3, 3, false);
    // R is unique only up to symmetries of D, so check the composite.
    RatFunc A = Compose(D, R);
    auto q = DivideLeft(A, D);
    check(q.R && q.R->degree() == R.degree() && EqualExact(Compose(D, *q.R), A),
          "divide_left pair " + std::to_string(t));
  }
}

void Stabilization(Checker& check) {
  auto r = InducedStabilization(RatFunc(Poly({1, 0, 1})), 3);
  check(r.N && *r.N == 1, "z^2+1: N != 1");
  for (const auto& lv : r.levels) {
    if (lv.d < 2) continue;
    for (const auto& w : lv.induced) check(w.has_value(), "z^2+1: class at d=" + std::to_string(lv.d) + " not induced");
    check(!lv.classes.empty(), "z^2+1: no classes at d=" + std::to_string(lv.d));
  }
  auto s = InducedStabilization(PowerMap(6), 2);
  int non_induced = 0;
  for (const auto& lv : s.levels) {
    for (const auto& w : lv.induced) non_induced += !w.has_value();
  }
  check(non_induced > 0, "z^6: every class induced");
}

void Bounds(Checker& check) {
  check(GenusBound(3, 6) == mpq_class(-83, 84), "genus_bound(3,6)");
  check(BoundC1(3) == 504, "bound_c1(3)");
  check(std::abs(BoundC2(3) - std::log2(1008.0)) < 1e-12, "bound_c2(3)");

  // Every tame left function met here, against graphs and random partners.
  std::mt19937_64 rng(5);
  int tame_seen = 0, components = 0;
  for (int t = 0; t < 4; ++t) {
    RatFunc A = testing::RandomRatFunc(rng, 3 + t % 2);
    auto tr = Tameness(A, t);
    if (!tr.tame) continue;
    ++tame_seen;
    std::vector<RatFunc> partners = {Compose(A, testing::RandomRatFunc(rng, 2)),
                                     testing::RandomRatFunc(rng, 2), testing::RandomRatFunc(rng, 3)};
    for (const auto& B : partners) {
      auto rep = CheckBound(A, B, t);
      components += static_cast<int>(rep.components.size());
      check(rep.dichotomy_holds, "dichotomy fails for " + A.ToString() + " / " + B.ToString());
    }
  }
  check(tame_seen >= 2 && components > 0, "too few tame functions sampled");
}

void Dynamics(Checker& check) {
  auto pairs = [](const IntersectReport& r) {
    std::vector<std::pair<int, int>> v;
    for (const auto& m : r.matches) v.emplace_back(m.k, m.l);
    return v;
  };
  ExactPoint two{false, GaussianRational(2)};
  check(pairs(OrbitIntersect(PowerMap(2), two, PowerMap(4), two, 8)) ==
            std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {4, 2}, {6, 3}, {8, 4}},
        "z^2 / z^4 matches");
  check(pairs(OrbitIntersect(PowerMap(2), two, PowerMap(3), two, 8)) ==
            std::vector<std::pair<int, int>>{{0, 0}},
        "z^2 / z^3 matches");
  auto ci = CommonIterateSearch(PowerMap(2), PowerMap(8), 10);
  check(ci.witness && *ci.witness == std::make_pair(3, 1), "common iterate of z^2, z^8");
  for (const auto& r : RunExperiments(ExperimentCorpus())) {
    check(!r.violation, "prime sets differ with many matches: " + r.input.label);
  }
}

void Identities(Checker& check) {
  for (int m = 1; m <= 24; ++m) {
    for (int n = 1; m * n <= 24; ++n) {
      check(EqualExact(Compose(Chebyshev(m), Chebyshev(n)), Chebyshev(m * n)),
            "T_" + std::to_string(m) + " o T_" + std::to_string(n));
    }
  }
  for (int l = 1; l <= 8; ++l) {
    for (int d = 1; d <= l; ++d) {
      if (l % d == 0) check(EqualExact(DMap(l), Compose(DMap(l / d), PowerMap(d))), "D identity");
    }
  }
  double worst = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int s = 0; s < 100; ++s) {
      double t = (s + 0.5) / 100;
      worst = std::max(worst, std::abs(Chebyshev(n).eval(Complex(std::cos(2 * std::numbers::pi * t), 0)) -
                                       std::cos(2 * std::numbers::pi * n * t)));
    }
  }
  check(worst < 1e-10, "cosine semiconjugacy error " + std::to_string(worst));
}

void Determinism(Checker& check) {
  const std::vector<std::pair<std::string, cli::KeyValues>> runs = {
      {"info", {{"arg", "rat4"}}},
      {"tame", {{"arg", "a_23"}}},
      {"curve", {{"arg", "rat3"}, {"arg", "z^2"}}},
      {"decompose", {{"arg", "rat6"}}},
      {"stabilize", {{"arg", "quad1"}}},
      {"equiv", {{"arg", "t6"}}},
      {"special", {{"arg", "lattes4"}}},
      {"monodromy", {{"arg", "rat4"}}},
      {"orbit", {{"arg", "quad2"}, {"x1", "0"}}},
      {"intersect", {{"A", "z^2"}, {"B", "z^4"}, {"x1", "2"}, {"x2", "2"}}},
      {"common-iterate", {{"A", "z^2"}, {"B", "z^8"}}},
      {"bounds", {{"n", "3"}, {"m", "6"}}},
  };
  for (const auto& [cmd, kv] : runs) {
    auto seeded = kv;
    seeded.emplace_back("seed", "3");
    auto a = nlohmann::json::parse(cli::Execute(cmd, seeded).json);
    auto b = nlohmann::json::parse(cli::Execute(cmd, seeded).json);
    a.erase("timing");
    b.erase("timing");
    check(a == b && a["status"] == "ok", cmd + " not reproducible");
  }
  for (const auto& e : BuiltinCorpus()) {
    RatFunc f = ParseFunction(e.expr);
    auto base = CurveComponents(f, f, 0);
    for (std::uint64_t seed : {1, 2}) {
      auto other = CurveComponents(f, f, seed);
      check(other.size() == base.size() && Genera(other) == Genera(base), e.name + ": seed dependence");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no runtime limit
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "degree-2 functions are wild", 10, DegreeTwoWild},
      {2, "A_{2,3} worked example", 30, WorkedExample},
      {3, "orbifold classifier", 0, Classifier},
      {4, "monodromy validity gates", 60, MonodromyGates},
      {5, "decomposition suite", 0, Decomposition},
      {6, "induced stabilization", 60, Stabilization},
      {7, "bound formulas and dichotomy", 0, Bounds},
      {8, "dynamics experiments", 30, Dynamics},
      {9, "identity suite", 0, Identities},
      {10, "determinism", 0, Determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checker check;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      check(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    std::printf("%s  [%2d] %-32s %8.2f s%s%s\n", check.ok() ? "PASS" : "FAIL", c.id, c.name, secs,
                check.ok() ? "" : "  ", check.summary().c_str());
    failed += !check.ok();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
