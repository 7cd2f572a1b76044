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

#ifndef RITTDYN_MONODROMY_HPP_
#define RITTDYN_MONODROMY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rittdyn/numerics.hpp"
#include "rittdyn/orbifold.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn {

// 0-based images: sheet i is carried to sheet p[i].
using Permutation = std::vector<int>;

Permutation IdentityPermutation(int n);
// Left-to-right product: first p, then q.
Permutation Multiply(const Permutation& p, const Permutation& q);
Permutation Inverse(const Permutation& p);
bool IsIdentity(const Permutation& p);
// Cycle lengths, nonincreasing, fixed points included.
std::vector<int> CycleType(const Permutation& p);
std::vector<std::vector<int>> Cycles(const Permutation& p);
// Orbits of the group generated by gens, each sorted, ordered by minimum.
std::vector<std::vector<int>> Orbits(int n, const std::vector<Permutation>& gens);
std::string CycleString(const Permutation& p);  // 1-based, "(1 2)(3)"

struct MonodromyOptions {
  TrackOptions track;
  PortraitOptions portrait;
  // Branch points closer than this (chordally) are identified.
  double match_tol = 1e-6;
  int base_candidates = 64;
  // Alternative base points tried when tracking fails.
  int base_retries = 4;
  bool parallel = true;
};

struct MonodromyData {
  int degree = 0;
  ComplexPoint base_point;
  // Finite points sorted by argument about the base point, then by
  // modulus; infinity, if present, comes last.
  std::vector<SpherePoint> branch_points;
  std::vector<Permutation> permutations;
  std::vector<Complex> fiber_labels;

  // The three acceptance gates; each returns an empty string on success or
  // a description of the first failure.
  std::string CheckProductOne() const;
  std::string CheckTransitive() const;
  std::string CheckCycleTypes(const RamificationPortrait& portrait,
                              double tol) const;
};

// Branch points of f, or the given superset of them.
MonodromyData Monodromy(const RatFunc& f,
                        const std::optional<std::vector<SpherePoint>>& branch_set,
                        std::uint64_t seed, const MonodromyOptions& opts = {});

// Monodromies of several functions over the union of their branch points,
// with one base point and one loop system.
std::vector<MonodromyData> SharedMonodromy(const std::vector<RatFunc>& fs,
                                           std::uint64_t seed,
                                           const MonodromyOptions& opts = {});

// Order of the group generated by gens, or nullopt once it exceeds cap.
std::optional<mpz_class> GroupOrder(int n, const std::vector<Permutation>& gens,
                                    const mpz_class& cap);
inline std::optional<mpz_class> GroupOrder(const MonodromyData& m,
                                           const mpz_class& cap) {
  return GroupOrder(m.degree, m.permutations, cap);
}

}  // namespace rittdyn

#endif  // RITTDYN_MONODROMY_HPP_
