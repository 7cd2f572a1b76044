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
#include <numeric>
#include <sstream>

#include "rittdyn/error.hpp"
#include "rittdyn/orbifold.hpp"

namespace rittdyn {

Signature Orbifold::signature() const {
  Signature s;
  for (const auto& [point, nu] : support) s.push_back(nu);
  std::sort(s.rbegin(), s.rend());
  return s;
}

std::string SignatureToString(const Signature& s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
  out << "}";
  return out.str();
}

mpq_class EulerCharacteristic(const Signature& s) {
  mpq_class chi = 2;
  for (int nu : s) chi += mpq_class(1, nu) - 1;
  chi.canonicalize();
  return chi;
}

bool InPositiveList(const Signature& s) {
  Signature t = s;
  std::sort(t.begin(), t.end());
  if (t.size() == 2) return t[0] == t[1] && t[0] >= 2;
  if (t.size() != 3) return false;
  if (t[0] == 2 && t[1] == 2 && t[2] >= 2) return true;
  return t[0] == 2 && t[1] == 3 && (t[2] == 3 || t[2] == 4 || t[2] == 5);
}

bool InZeroList(const Signature& s) {
  Signature t = s;
  std::sort(t.begin(), t.end());
  return t == Signature{2, 2, 2, 2} || t == Signature{3, 3, 3} ||
         t == Signature{2, 4, 4} || t == Signature{2, 3, 6};
}

Orbifold TargetOrbifold(const RamificationPortrait& portrait) {
  Orbifold o;
  for (const auto& b : portrait.branch_points) {
    int nu = 1;
    for (int e : b.partition) nu = std::lcm(nu, e);
    if (nu >= 2) o.support.emplace_back(b.value, nu);
  }
  return o;
}

OrbifoldPair NuPair(const RatFunc& f, const RamificationPortrait& portrait,
                    const PortraitOptions& opts) {
  OrbifoldPair pair;
  pair.target = TargetOrbifold(portrait);
  for (std::size_t k = 0; k < portrait.branch_points.size(); ++k) {
    int nu2 = 1;
    for (int e : portrait.branch_points[k].partition) nu2 = std::lcm(nu2, e);
    for (const auto& [z, e] : FiberWithDegrees(f, portrait, k, opts)) {
      if (nu2 % e != 0) {
        ThrowInternal("nu_1 not integral at a preimage of " +
                      portrait.branch_points[k].value.ToString());
      }
      int nu1 = nu2 / e;
      if (nu1 >= 2) pair.source.support.emplace_back(z, nu1);
    }
  }
  return pair;
}

std::string ToString(GenusClass c) {
  switch (c) {
    case GenusClass::kZero:
      return "zero";
    case GenusClass::kOne:
      return "one";
    case GenusClass::kGreaterThanOne:
      return "greater_than_one";
  }
  return "unknown";
}

GenusClass ClassifyTargetOrbifold(const Orbifold& target) {
  Signature s = target.signature();
  mpq_class chi = EulerCharacteristic(s);
  const bool positive = sgn(chi) > 0, zero = sgn(chi) == 0;
  if (positive != InPositiveList(s) || zero != InZeroList(s)) {
    ThrowInternal("signature " + SignatureToString(s) +
                  " disagrees with the Euler characteristic lists");
  }
  if (positive) return GenusClass::kZero;
  if (zero) return GenusClass::kOne;
  return GenusClass::kGreaterThanOne;
}

GenusClass NormalizationGenusClass(const RatFunc& f, const PortraitOptions& opts) {
  return ClassifyTargetOrbifold(TargetOrbifold(ComputePortrait(f, opts)));
}

}  // namespace rittdyn
