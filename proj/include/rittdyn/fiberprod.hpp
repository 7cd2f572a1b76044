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

#ifndef RITTDYN_FIBERPROD_HPP_
#define RITTDYN_FIBERPROD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rittdyn/decomp.hpp"
#include "rittdyn/monodromy.hpp"
#include "rittdyn/orbifold.hpp"

namespace rittdyn {

// One irreducible component of A(x) - B(y) = 0, as an orbit of fiber-label
// pairs (i, j) with A(x_i) = B(y_j) over the base point.
struct FiberComponent {
  std::vector<std::pair<int, int>> pair_orbit;  // sorted
  int total_degree = 0;  // |orbit|
  int deg_x = 0;         // degree of the factor in x: |orbit| / deg B
  int deg_y = 0;         // degree of the factor in y: |orbit| / deg A
  int genus = 0;
  bool is_diagonal = false;
};

// Components from two monodromies over one loop system. same_labels marks
// the A = B case, where pairs (i, i) form the diagonal.
std::vector<FiberComponent> ComponentsFromMonodromy(const MonodromyData& a,
                                                    const MonodromyData& b,
                                                    bool same_labels);

std::vector<FiberComponent> CurveComponents(const RatFunc& A, const RatFunc& B,
                                            std::uint64_t seed,
                                            const MonodromyOptions& opts = {});

struct TamenessReport {
  bool tame = false;
  // Set when wildness follows from an orbifold of genus class zero or one,
  // for A itself or for a right factor.
  bool fast_path = false;
  GenusClass class_of_A = GenusClass::kGreaterThanOne;
  std::optional<RatFunc> right_factor;  // the factor that triggered the fast path
  std::optional<GenusClass> right_factor_class;
  std::vector<FiberComponent> components;
  // False if the fast path said wild but no non-diagonal component of
  // genus at most one was found.
  bool consistent = true;
  std::string reason;
};

TamenessReport Tameness(const RatFunc& A, std::uint64_t seed);

// (m / n! - 84 n + 168) / 84.
mpq_class GenusBound(int n, int m);
// 84 (n - 2) n!.
mpz_class BoundC1(int n);
// log2(84 (m - 1) m!).
double BoundC2(int m);

struct ComponentVerdict {
  FiberComponent component;
  bool satisfies_bound = false;
  bool is_graph = false;  // x = S(y) with B = A o S
  std::optional<RatFunc> S;
};

struct BoundReport {
  int n = 0, m = 0;
  mpq_class bound;
  bool a_tame = false;
  std::vector<ComponentVerdict> components;
  bool dichotomy_holds = true;
};

// Evaluates the bound-or-graph dichotomy on the given components.
BoundReport CheckBound(const RatFunc& A, const RatFunc& B,
                       const std::vector<FiberComponent>& components, bool a_tame,
                       std::uint64_t seed = 0);
BoundReport CheckBound(const RatFunc& A, const RatFunc& B, std::uint64_t seed);

}  // namespace rittdyn

#endif  // RITTDYN_FIBERPROD_HPP_
