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

#ifndef RITTDYN_DECOMP_HPP_
#define RITTDYN_DECOMP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rittdyn/monodromy.hpp"
#include "rittdyn/poly.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn {

struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // each sorted, ordered by minimum
  int block_size = 0;
  int block_count = 0;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

// All nontrivial block systems, sorted by block size then lexicographically.
std::vector<BlockSystem> BlockSystems(int n, const std::vector<Permutation>& gens);
inline std::vector<BlockSystem> BlockSystems(const MonodromyData& m) {
  return BlockSystems(m.degree, m.permutations);
}

enum class FactorStatus { kExact, kNumericOnly };

// f = U o V up to U -> U o mu, V -> mu^-1 o V.
struct DecompClass {
  RatFunc U, V;
  std::string normalization;
  FactorStatus status = FactorStatus::kExact;
  std::optional<BlockSystem> blocks;
  // Approximate V when status is kNumericOnly (num, den low to high).
  std::vector<Complex> numeric_num, numeric_den;
};

// Every decomposition with V monic and V(0) = 0, one per divisor of deg f.
std::vector<DecompClass> PolyDecompose(const Poly& f, bool include_trivial = false);

// The normal-form right factor of degree r, when f has one.
std::optional<Poly> PolyRightFactor(const Poly& f, int r);

// G with G o W = F, decided exactly.
std::optional<RatFunc> DivideRight(const RatFunc& F, const RatFunc& W);

struct DivideLeftResult {
  std::optional<RatFunc> R;  // D o R = A exactly
  // Set when a factor was seen numerically but could not be made exact.
  bool numeric_witness = false;
  std::string note;
};
// R with D o R = A. Exact for polynomials; rational inputs go through block
// systems of A and an exact check.
DivideLeftResult DivideLeft(const RatFunc& A, const RatFunc& D, std::uint64_t seed = 0);

struct EngstromResult {
  Poly U, V, A1, C1, D1, B1;  // A = U o A1, D = U o D1, C = C1 o V, B = B1 o V
};
// Requires A o C = D o B, all polynomials.
EngstromResult EngstromSplit(const Poly& A, const Poly& C, const Poly& D, const Poly& B);

// Nontrivial decomposition classes of f. Polynomials exactly; rational
// functions through the block systems of their monodromy.
std::vector<DecompClass> Decompose(const RatFunc& f, std::uint64_t seed = 0);
std::vector<DecompClass> DecomposeFromBlocks(const RatFunc& f, const MonodromyData& m);

// mu with D o mu = U, found numerically and verified exactly.
std::optional<Mobius> FindLeftMobius(const RatFunc& U, const RatFunc& D);

struct ConjugacyResult {
  bool conjugate = false;
  // Verdict decided by exact arithmetic (always for polynomials).
  bool exact = false;
  // g = mu^-1 o f o mu, when mu has coefficients in Q(i).
  std::optional<Mobius> mu;
  std::string witness;
};
ConjugacyResult TestConjugate(const RatFunc& f, const RatFunc& g);

struct InducedWitness {
  int level = 0;  // N
  int k1 = 0, k2 = 0;
  RatFunc X1, Y1;  // A^N = X1 o Y1, X = A^k1 o X1, Y = Y1 o A^k2
};
// Whether A^d = X o Y is induced by a decomposition of A^level.
std::optional<InducedWitness> InducedFrom(const RatFunc& A, int d, const RatFunc& X,
                                          const RatFunc& Y, int level,
                                          int degree_guard = kDefaultDegreeGuard);

struct IterateClasses {
  int d = 0;
  std::vector<DecompClass> classes;
  // For each class, the lowest level it is induced from (if any), with witness.
  std::vector<std::optional<InducedWitness>> induced;
};

struct StabilizationReport {
  std::vector<IterateClasses> levels;  // d = 1 .. d_max
  std::optional<int> N;                // nullopt: not stabilized by d_max
};

StabilizationReport InducedStabilization(const RatFunc& A, int d_max, std::uint64_t seed = 0,
                                         int degree_guard = kDefaultDegreeGuard);

struct EquivEdge {
  int from = 0, to = 0;  // representative indices
  RatFunc L, R;          // rep[from] = L o R; R o L is conjugate to rep[to]
  RatFunc produced;      // R o L
  ConjugacyResult conjugacy;  // produced versus rep[to]
};

struct EquivClassReport {
  std::vector<RatFunc> representatives;
  std::vector<EquivEdge> edges;
  int count = 0;
  bool closed = false;  // false: count is only a lower bound
  // Edges from A to each representative (indices into edges).
  std::vector<std::vector<int>> chains;
};

EquivClassReport EquivalenceClasses(const RatFunc& A, int depth, std::uint64_t seed = 0);

}  // namespace rittdyn

#endif  // RITTDYN_DECOMP_HPP_
