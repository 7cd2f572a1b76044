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

#ifndef RITTDYN_DYNAMICS_HPP_
#define RITTDYN_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rittdyn/orbifold.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn {

enum class FamilyKind { kPower, kChebyshev, kD, kLattesSample, kLattesDoubling };

// z^n (n may be negative), T_n with T_n(cos t) = cos(n t), D_s = (z^s +
// z^-s) / 2, and two flexible Lattes maps. The sample is the degree-5 map
// coming from multiplication by 2 + i on the Gaussian lattice; the doubling
// map is (z^2 + 1)^2 / (4 z (z^2 - 1)). The parameter is ignored for both.
RatFunc MakeFamily(FamilyKind kind, int param = 0);
inline RatFunc PowerMap(int n) { return MakeFamily(FamilyKind::kPower, n); }
inline RatFunc Chebyshev(int n) { return MakeFamily(FamilyKind::kChebyshev, n); }
inline RatFunc DMap(int s) { return MakeFamily(FamilyKind::kD, s); }

enum class SpecialClass {
  kPowerConjugate,
  kChebyshevConjugate,
  kLattesCandidate,
  kNonSpecial
};
std::string ToString(SpecialClass c);

struct SpecialVerdict {
  SpecialClass cls = SpecialClass::kNonSpecial;
  // Normal form matched for power and Chebyshev maps: "z^3", "-T_4", ...
  std::string model;
  // f = mu^-1 o model o mu, when mu has coefficients in Q(i).
  std::optional<Mobius> mu;
  // The verdict was confirmed by exact composition.
  bool exact = false;
  // Invariant orbifold on the postcritical set for Lattes candidates.
  std::optional<Orbifold> orbifold;
  std::string note;
};

// Power and Chebyshev conjugacy through TestConjugate against the normal
// forms; Lattes candidacy through the covering condition on the orbifold
// carried by the postcritical set. Requires deg f >= 2.
SpecialVerdict SpecialDetect(const RatFunc& f);

inline constexpr std::size_t kDefaultBitCap = std::size_t{1} << 16;

struct OrbitRecord {
  ExactPoint start;
  std::vector<ExactPoint> points;  // points[0] = start
  // (tail, period) once a point repeats.
  std::optional<std::pair<int, int>> preperiodic;
  // Stopped early because a point exceeded the bit cap.
  bool truncated = false;

  // A^k(start) for any k, using the cycle past the stored points.
  std::optional<ExactPoint> at(int k) const;
};

// Up to `length` iterates past the start.
OrbitRecord ExactOrbit(const RatFunc& f, const ExactPoint& start, int length,
                       std::size_t bit_cap = kDefaultBitCap);

struct OrbitMatch {
  int k = 0, l = 0;
  ExactPoint point;
};

struct IntersectReport {
  std::vector<OrbitMatch> matches;  // sorted by (k, l)
  OrbitRecord orbit_a, orbit_b;
  bool truncated = false;
  // Horizon-limited evidence, never a finiteness proof.
  std::string note;
};

// All A^k(x1) = B^l(x2) with k, l <= horizon. Requires degrees >= 2.
IntersectReport OrbitIntersect(const RatFunc& A, const ExactPoint& x1,
                               const RatFunc& B, const ExactPoint& x2,
                               int horizon,
                               std::size_t bit_cap = kDefaultBitCap);

struct CommonIterateReport {
  std::optional<std::pair<int, int>> witness;
  // (k, l) pairs with matching degrees that were compared.
  std::vector<std::pair<int, int>> tested;
  // The scan stopped at an iterate above the degree guard.
  bool guard_hit = false;
};

// First (k, l) with A^k = B^l, k <= bound, scanning only degree-compatible
// pairs. Requires degrees >= 2.
CommonIterateReport CommonIterateSearch(const RatFunc& A, const RatFunc& B,
                                        int bound,
                                        int degree_guard = kDefaultDegreeGuard);

// True iff deg A and deg B have the same prime divisors.
bool PrimeSetCheck(const RatFunc& A, const RatFunc& B);
std::vector<int> PrimeDivisors(int n);

struct ExperimentCase {
  std::string label;
  RatFunc A, B;
  ExactPoint x1, x2;
};
struct ExperimentResult {
  ExperimentCase input;
  IntersectReport report;
  bool same_primes = false;
  // Many matches but different prime sets.
  bool violation = false;
};

// Built-in pairs used for the orbit experiments.
std::vector<ExperimentCase> ExperimentCorpus();
// Runs the cases concurrently; results keep the input order. A case counts as
// a violation when it has at least `min_matches` matches and the prime sets of
// the degrees differ.
std::vector<ExperimentResult> RunExperiments(
    const std::vector<ExperimentCase>& cases, int horizon = 12,
    int min_matches = 5, std::size_t bit_cap = kDefaultBitCap);

}  // namespace rittdyn

#endif  // RITTDYN_DYNAMICS_HPP_
