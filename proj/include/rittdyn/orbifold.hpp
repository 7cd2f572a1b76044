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
#ifndef RITTDYN_ORBIFOLD_HPP_
#define RITTDYN_ORBIFOLD_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rittdyn/numerics.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn {

// A point of the Riemann sphere, known exactly when `exact` is set.
struct SpherePoint {
  bool infinite = false;
  Complex approx;
  std::optional<GaussianRational> exact;
  double error_radius = 0.0;

  static SpherePoint Infinity() { return {true, {}, std::nullopt, 0.0}; }
  static SpherePoint FromExact(const ExactPoint& p);
  static SpherePoint Numeric(Complex z, double err = 0.0) {
    return {false, z, std::nullopt, err};
  }

  bool is_exact() const { return infinite || exact.has_value(); }
  std::optional<ExactPoint> as_exact() const;
  // Exact comparison when both are exact, chordal distance <= tol otherwise.
  bool SameAs(const SpherePoint& o, double tol) const;
  double ChordalTo(const SpherePoint& o) const;
  std::string ToString() const;
};

struct CriticalPoint {
  SpherePoint point;
  int local_degree = 1;
  SpherePoint value;
};

struct BranchPoint {
  SpherePoint value;
  std::vector<int> partition;  // nonincreasing, sums to the degree
  // Confirmed by exact squarefree factorization of num - value * den.
  bool exact_partition = false;
  // Indices into RamificationPortrait::critical_points over this value.
  std::vector<std::size_t> critical;
};

struct PortraitOptions {
  RootOptions roots;
  double value_cluster_tol = 1e-8;
};

// Branch points of f with the local-degree partition over each of them.
// Finite branch points come first ordered by (re, im); infinity is last.
struct RamificationPortrait {
  int degree = 0;
  std::vector<CriticalPoint> critical_points;
  std::vector<BranchPoint> branch_points;

  // sum over branch points of (degree - #parts) == 2 degree - 2
  bool SatisfiesRiemannHurwitz() const;
  // Index of the branch point matching p, or -1.
  int Find(const SpherePoint& p, double tol) const;
};

// Throws ErrorKind::kNumeric on root-finder failure and kInternal when the
// computed partitions violate Riemann-Hurwitz.
RamificationPortrait ComputePortrait(const RatFunc& f,
                                     const PortraitOptions& opts = {});

// Preimages of a branch value with their local degrees.
std::vector<std::pair<SpherePoint, int>> FiberWithDegrees(
    const RatFunc& f, const RamificationPortrait& portrait,
    std::size_t branch_index, const PortraitOptions& opts = {});

using Signature = std::vector<int>;

struct Orbifold {
  std::vector<std::pair<SpherePoint, int>> support;  // every weight >= 2

  Signature signature() const;
};

std::string SignatureToString(const Signature& s);
mpq_class EulerCharacteristic(const Signature& s);
inline mpq_class EulerCharacteristic(const Orbifold& o) {
  return EulerCharacteristic(o.signature());
}
// Signatures of positive Euler characteristic: {n,n}, {2,2,n}, {2,3,3},
// {2,3,4}, {2,3,5}.
bool InPositiveList(const Signature& s);
// Signatures of zero Euler characteristic: {2,2,2,2}, {3,3,3}, {2,4,4},
// {2,3,6}.
bool InZeroList(const Signature& s);

struct OrbifoldPair {
  Orbifold source;  // nu_1
  Orbifold target;  // nu_2
};

// nu_2(z) = lcm of local degrees over f^{-1}(z); nu_1(z) = nu_2(f(z)) /
// deg_z f. Throws kInternal if a quotient is not integral.
OrbifoldPair NuPair(const RatFunc& f, const RamificationPortrait& portrait,
                    const PortraitOptions& opts = {});
Orbifold TargetOrbifold(const RamificationPortrait& portrait);

enum class GenusClass { kZero, kOne, kGreaterThanOne };
std::string ToString(GenusClass c);

// Genus class of the Galois closure of f from the sign of chi(O_2^f), with
// the signature lists cross-checked (kInternal on disagreement).
GenusClass ClassifyTargetOrbifold(const Orbifold& target);
GenusClass NormalizationGenusClass(const RatFunc& f,
                                   const PortraitOptions& opts = {});

}  // namespace rittdyn

#endif  // RITTDYN_ORBIFOLD_HPP_
