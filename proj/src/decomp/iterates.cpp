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

#include <deque>

#include "rittdyn/decomp.hpp"
#include "rittdyn/error.hpp"

namespace rittdyn {

std::optional<InducedWitness> InducedFrom(const RatFunc& A, int d, const RatFunc& X,
                                          const RatFunc& Y, int level, int degree_guard) {
  if (level < 1 || level >= d) return std::nullopt;
  RatFunc AN = Iterate(A, level, degree_guard);
  for (int k2 = 0; k2 <= d - level; ++k2) {
    int k1 = d - level - k2;
    std::optional<RatFunc> Y1 = Y;
    if (k2 > 0) Y1 = DivideRight(Y, Iterate(A, k2, degree_guard));
    if (!Y1) continue;
    auto X1 = DivideRight(AN, *Y1);
    if (!X1) continue;
    RatFunc lhs = k1 > 0 ? Compose(Iterate(A, k1, degree_guard), *X1, degree_guard) : *X1;
    if (EqualExact(lhs, X)) return InducedWitness{level, k1, k2, *X1, *Y1};
  }
  return std::nullopt;
}

StabilizationReport InducedStabilization(const RatFunc& A, int d_max, std::uint64_t seed,
                                         int degree_guard) {
  if (A.degree() < 2) ThrowPrecondition("induced_stabilization: degree must be at least 2");
  if (d_max < 2) ThrowPrecondition("induced_stabilization: d_max must be at least 2");
  StabilizationReport rep;
  for (int d = 1; d <= d_max; ++d) {
    IterateClasses lv;
    lv.d = d;
    RatFunc Ad = Iterate(A, d, degree_guard);
    lv.classes = Decompose(Ad, seed);
    for (const auto& c : lv.classes) {
      std::optional<InducedWitness> w;
      if (c.status == FactorStatus::kExact) {
        for (int level = 1; level < d && !w; ++level) {
          w = InducedFrom(A, d, c.U, c.V, level, degree_guard);
        }
      }
      lv.induced.push_back(std::move(w));
    }
    rep.levels.push_back(std::move(lv));
  }
  for (int N = 1; N < d_max && !rep.N; ++N) {
    bool all = true;
    for (int d = N + 1; d <= d_max && all; ++d) {
      for (const auto& c : rep.levels[d - 1].classes) {
        if (c.status != FactorStatus::kExact ||
            !InducedFrom(A, d, c.U, c.V, N, degree_guard)) {
          all = false;
          break;
        }
      }
    }
    if (all) rep.N = N;
  }
  return rep;
}

EquivClassReport EquivalenceClasses(const RatFunc& A, int depth, std::uint64_t seed) {
  if (A.degree() < 2) ThrowPrecondition("equivalence_classes: degree must be at least 2");
  EquivClassReport rep;
  rep.representatives.push_back(A);
  rep.chains.push_back({});
  std::vector<int> level{0};
  std::deque<int> queue{0};
  bool truncated = false;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (level[i] >= depth) {
      truncated = true;
      continue;
    }
    RatFunc f = rep.representatives[i];
    for (const auto& cls : Decompose(f, seed)) {
      if (cls.status != FactorStatus::kExact) continue;
      EquivEdge e;
      e.from = i;
      e.L = cls.U;
      e.R = cls.V;
      if (!EqualExact(Compose(e.L, e.R), f)) {
        ThrowInternal("equivalence_classes: decomposition does not recompose");
      }
      e.produced = Compose(e.R, e.L);
      int match = -1;
      for (std::size_t j = 0; j < rep.representatives.size() && match < 0; ++j) {
        auto c = TestConjugate(rep.representatives[j], e.produced);
        if (c.conjugate) {
          match = static_cast<int>(j);
          e.conjugacy = c;
        }
      }
      if (match < 0) {
        match = static_cast<int>(rep.representatives.size());
        rep.representatives.push_back(e.produced);
        e.conjugacy = TestConjugate(e.produced, e.produced);
        level.push_back(level[i] + 1);
        std::vector<int> chain = rep.chains[i];
        chain.push_back(static_cast<int>(rep.edges.size()));
        rep.chains.push_back(std::move(chain));
        queue.push_back(match);
      }
      e.to = match;
      rep.edges.push_back(std::move(e));
    }
  }
  rep.count = static_cast<int>(rep.representatives.size());
  rep.closed = !truncated;
  return rep;
}

}  // namespace rittdyn
