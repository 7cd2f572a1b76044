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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rittdyn/error.hpp"
#include "rittdyn/fiberprod.hpp"

namespace rittdyn {

std::vector<FiberComponent> ComponentsFromMonodromy(const MonodromyData& a,
                                                    const MonodromyData& b,
                                                    bool same_labels) {
  const int n = a.degree, m = b.degree;
  if (a.permutations.size() != b.permutations.size()) {
    ThrowPrecondition("curve_components: monodromies use different loop systems");
  }
  // Pair (i, j) is encoded as i * m + j.
  std::vector<Permutation> diag;
  for (std::size_t k = 0; k < a.permutations.size(); ++k) {
    Permutation g(static_cast<std::size_t>(n * m));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) g[i * m + j] = a.permutations[k][i] * m + b.permutations[k][j];
    }
    diag.push_back(std::move(g));
  }
  std::vector<FiberComponent> out;
  for (const auto& orbit : Orbits(n * m, diag)) {
    FiberComponent c;
    const int size = static_cast<int>(orbit.size());
    c.total_degree = size;
    if (size % n != 0 || size % m != 0) {
      ThrowInternal("curve_components: orbit size not divisible by both degrees");
    }
    c.deg_x = size / m;
    c.deg_y = size / n;
    std::vector<bool> in(static_cast<std::size_t>(n * m), false);
    for (int p : orbit) {
      in[p] = true;
      c.pair_orbit.push_back({p / m, p % m});
    }
    // Riemann-Hurwitz over the loops: chi = 2|O| - sum (|O| - #cycles).
    long chi = 2L * size;
    for (const auto& g : diag) {
      std::vector<bool> seen(in.size(), false);
      int cycles = 0;
      for (int p : orbit) {
        if (seen[p]) continue;
        ++cycles;
        for (int q = p; !seen[q]; q = g[q]) seen[q] = true;
      }
      chi -= size - cycles;
    }
    if (chi % 2 != 0) ThrowInternal("curve_components: odd Euler characteristic");
    c.genus = static_cast<int>(1 - chi / 2);
    if (c.genus < 0) ThrowInternal("curve_components: negative genus");
    c.is_diagonal = same_labels && std::find(orbit.begin(), orbit.end(), 0) != orbit.end() &&
                    std::all_of(c.pair_orbit.begin(), c.pair_orbit.end(),
                                [](const auto& pr) { return pr.first == pr.second; });
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FiberComponent> CurveComponents(const RatFunc& A, const RatFunc& B,
                                            std::uint64_t seed,
                                            const MonodromyOptions& opts) {
  if (A.degree() < 2 || B.degree() < 2) {
    ThrowPrecondition("curve_components: degrees must be at least 2");
  }
  if (EqualExact(A, B)) {
    auto m = Monodromy(A, std::nullopt, seed, opts);
    return ComponentsFromMonodromy(m, m, true);
  }
  auto ms = SharedMonodromy({A, B}, seed, opts);
  return ComponentsFromMonodromy(ms[0], ms[1], false);
}

TamenessReport Tameness(const RatFunc& A, std::uint64_t seed) {
  if (A.degree() < 2) ThrowPrecondition("tameness: degree must be at least 2");
  TamenessReport rep;
  rep.class_of_A = NormalizationGenusClass(A);
  if (rep.class_of_A != GenusClass::kGreaterThanOne) {
    rep.fast_path = true;
    rep.reason = "normalization genus class of A is " + ToString(rep.class_of_A);
  } else {
    for (const auto& cls : Decompose(A, seed)) {
      if (cls.status != FactorStatus::kExact || cls.V.degree() < 2) continue;
      GenusClass gc = NormalizationGenusClass(cls.V);
      if (gc != GenusClass::kGreaterThanOne) {
        rep.fast_path = true;
        rep.right_factor = cls.V;
        rep.right_factor_class = gc;
        rep.reason = "right factor " + cls.V.ToString() + " has normalization genus class " +
                     ToString(gc);
        break;
      }
    }
  }
  // Components are computed on both paths so the verdict comes with the
  // genus list.
  auto m = Monodromy(A, std::nullopt, seed);
  rep.components = ComponentsFromMonodromy(m, m, true);
  bool low = false;
  for (const auto& c : rep.components) {
    if (!c.is_diagonal && c.genus <= 1) low = true;
  }
  if (rep.fast_path) {
    rep.tame = false;
    rep.consistent = low;
  } else {
    rep.tame = !low;
    rep.reason = low ? "non-diagonal component of genus at most one"
                     : "every non-diagonal component has genus at least two";
  }
  return rep;
}

mpq_class GenusBound(int n, int m) {
  mpz_class fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  mpq_class v = mpq_class(m) / mpq_class(fact) - 84 * n + 168;
  v /= 84;
  v.canonicalize();
  return v;
}

mpz_class BoundC1(int n) {
  mpz_class fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  return 84 * mpz_class(n - 2) * fact;
}

double BoundC2(int m) {
  double lg = std::log2(84.0 * (m - 1));
  for (int k = 2; k <= m; ++k) lg += std::log2(static_cast<double>(k));
  return lg;
}

BoundReport CheckBound(const RatFunc& A, const RatFunc& B,
                       const std::vector<FiberComponent>& components, bool a_tame,
                       std::uint64_t seed) {
  BoundReport rep;
  rep.n = A.degree();
  rep.m = B.degree();
  rep.bound = GenusBound(rep.n, rep.m);
  rep.a_tame = a_tame;
  std::optional<DivideLeftResult> division;
  for (const auto& c : components) {
    ComponentVerdict v;
    v.component = c;
    v.satisfies_bound = mpq_class(c.genus) >= rep.bound;
    if (c.deg_x == 1) {
      if (!division) division = DivideLeft(B, A, seed);
      if (division->R) {
        v.is_graph = true;
        v.S = division->R;
      }
    }
    if (!v.satisfies_bound && !v.is_graph) rep.dichotomy_holds = false;
    rep.components.push_back(std::move(v));
  }
  return rep;
}

BoundReport CheckBound(const RatFunc& A, const RatFunc& B, std::uint64_t seed) {
  if (A.degree() < 3) ThrowPrecondition("check_bound: deg A must be at least 3");
  if (B.degree() < 2) ThrowPrecondition("check_bound: deg B must be at least 2");
  bool tame = Tameness(A, seed).tame;
  return CheckBound(A, B, CurveComponents(A, B, seed), tame, seed);
}

}  // namespace rittdyn
