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

#include "rittdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "rittdyn/decomp.hpp"
#include "rittdyn/error.hpp"

namespace rittdyn {
namespace {

struct PointHash {
  std::size_t operator()(const ExactPoint& p) const { return p.hash(); }
};

RatFunc LattesSample() {
  GaussianRational i = GaussianRational::I();
  Poly a(std::vector<GaussianRational>{GaussianRational(-1) + i * 2, 0, 1});
  Poly b(std::vector<GaussianRational>{-1, 0, GaussianRational(1) - i * 2});
  return RatFunc(-(Poly::X() * a.pow(2)), b.pow(2));
}

// ---------------------------------------------------------------------------
// Lattes candidacy.

constexpr double kPointTol = 1e-6;
// Largest weight in any signature of zero Euler characteristic.
constexpr int kMaxWeight = 6;

SpherePoint Image(const RatFunc& f, const SpherePoint& s) {
  if (auto e = s.as_exact()) return SpherePoint::FromExact(f.eval(*e));
  Complex v = f.eval(s.approx);
  if (!std::isfinite(std::abs(v)) || std::abs(v) > 1e12) return SpherePoint::Infinity();
  return SpherePoint::Numeric(v, s.error_radius);
}

int FindPoint(const std::vector<SpherePoint>& pts, const SpherePoint& p) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].SameAs(p, kPointTol)) return static_cast<int>(k);
  }
  return -1;
}

// Fills `v` with the verdict when f is a Lattes candidate.
bool LattesCheck(const RatFunc& f, const RamificationPortrait& portrait,
                 SpecialVerdict& v) {
  const int n = f.degree();
  std::vector<SpherePoint> post;
  std::vector<SpherePoint> queue;
  for (const auto& b : portrait.branch_points) queue.push_back(b.value);
  while (!queue.empty()) {
    SpherePoint p = queue.back();
    queue.pop_back();
    if (FindPoint(post, p) >= 0) continue;
    post.push_back(p);
    if (post.size() > 4) {
      v.note = "postcritical set has more than four points";
      return false;
    }
    queue.push_back(Image(f, p));
  }

  // Preimages of each postcritical point: critical ones with local degree,
  // plus the noncritical postcritical points mapping there.
  struct Pre {
    int post_index;  // -1 outside the postcritical set
    int degree;
  };
  std::vector<std::vector<Pre>> pre(post.size());
  std::vector<int> crit_sum(post.size(), 0);
  std::vector<bool> is_crit(post.size(), false);
  for (const auto& c : portrait.critical_points) {
    int t = FindPoint(post, c.value);
    if (t < 0) ThrowInternal("special_detect: critical value outside postcritical set");
    int s = FindPoint(post, c.point);
    if (s >= 0) is_crit[s] = true;
    pre[t].push_back({s, c.local_degree});
    crit_sum[t] += c.local_degree;
  }
  for (std::size_t s = 0; s < post.size(); ++s) {
    if (is_crit[s]) continue;
    int t = FindPoint(post, Image(f, post[s]));
    if (t < 0) ThrowInternal("special_detect: postcritical set not forward invariant");
    pre[t].push_back({static_cast<int>(s), 1});
  }

  std::vector<int> nu(post.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < post.size(); ++t) {
      int w = nu[t];
      for (const auto& q : pre[t]) w = std::lcm(w, q.degree * (q.post_index >= 0 ? nu[q.post_index] : 1));
      if (w > kMaxWeight) {
        v.note = "orbifold weight grows without bound";
        return false;
      }
      if (w != nu[t]) nu[t] = w, changed = true;
    }
  }

  Orbifold o;
  for (std::size_t t = 0; t < post.size(); ++t) {
    if (nu[t] >= 2) o.support.emplace_back(post[t], nu[t]);
  }
  Signature sig = o.signature();
  if (!InZeroList(sig)) {
    v.note = "invariant orbifold " + SignatureToString(sig) + " has nonzero Euler characteristic";
    return false;
  }
  // Covering condition nu(f(z)) = nu(z) deg_z f over the support.
  for (std::size_t t = 0; t < post.size(); ++t) {
    int noncrit = 0;
    for (const auto& q : pre[t]) {
      int nz = q.post_index >= 0 ? nu[q.post_index] : 1;
      if (nz * q.degree != nu[t]) {
        v.note = "covering condition fails over " + post[t].ToString();
        return false;
      }
      if (q.degree == 1) ++noncrit;
    }
    if (nu[t] > 1 && noncrit != n - crit_sum[t]) {
      v.note = "unramified preimage of a cone point over " + post[t].ToString();
      return false;
    }
  }
  v.cls = SpecialClass::kLattesCandidate;
  v.exact = std::all_of(post.begin(), post.end(), [](const SpherePoint& p) { return p.is_exact(); });
  v.note = "self-covering of the orbifold " + SignatureToString(sig);
  v.orbifold = std::move(o);
  return true;
}

bool FullyRamified(const BranchPoint& b, int n) {
  return b.partition.size() == 1 && b.partition[0] == n;
}

bool TryModels(const RatFunc& f, SpecialClass cls,
               const std::vector<std::pair<std::string, RatFunc>>& models,
               SpecialVerdict& v) {
  for (const auto& [name, model] : models) {
    ConjugacyResult c;
    try {
      c = TestConjugate(model, f);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNumeric) throw;
      continue;
    }
    if (!c.conjugate) continue;
    v.cls = cls;
    v.model = name;
    v.mu = c.mu;
    v.exact = c.exact && c.mu.has_value();
    v.note = c.witness;
    return true;
  }
  return false;
}

}  // namespace

RatFunc MakeFamily(FamilyKind kind, int param) {
  switch (kind) {
    case FamilyKind::kPower:
      if (param == 0) ThrowPrecondition("power: exponent must be nonzero");
      if (param > 0) return RatFunc(Poly::Monomial(1, param));
      return RatFunc(Poly({1}), Poly::Monomial(1, -param));
    case FamilyKind::kChebyshev: {
      if (param < 1) ThrowPrecondition("chebyshev: n must be >= 1");
      Poly prev({1}), cur = Poly::X();
      for (int k = 1; k < param; ++k) {
        Poly next = Poly({0, 2}) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return RatFunc(cur);
    }
    case FamilyKind::kD:
      if (param < 1) ThrowPrecondition("D: s must be >= 1");
      return RatFunc(Poly::Monomial(1, 2 * param) + Poly({1}), Poly::Monomial(2, param));
    case FamilyKind::kLattesSample:
      return LattesSample();
    case FamilyKind::kLattesDoubling:
      return RatFunc(Poly({1, 0, 1}).pow(2), Poly({0, -4, 0, 4}));
  }
  ThrowPrecondition("unknown family");
}

std::string ToString(SpecialClass c) {
  switch (c) {
    case SpecialClass::kPowerConjugate: return "power_conjugate";
    case SpecialClass::kChebyshevConjugate: return "chebyshev_conjugate";
    case SpecialClass::kLattesCandidate: return "lattes_candidate";
    case SpecialClass::kNonSpecial: return "non_special";
  }
  return "?";
}

SpecialVerdict SpecialDetect(const RatFunc& f) {
  const int n = f.degree();
  if (n < 2) ThrowPrecondition("special_detect: degree must be >= 2");
  SpecialVerdict v;
  auto portrait = ComputePortrait(f);
  const auto& bps = portrait.branch_points;
  int full = static_cast<int>(std::count_if(bps.begin(), bps.end(),
                                             [&](const BranchPoint& b) { return FullyRamified(b, n); }));
  std::string sn = std::to_string(n);
  if (bps.size() == 2 && full == 2 &&
      TryModels(f, SpecialClass::kPowerConjugate,
                {{"z^" + sn, PowerMap(n)}, {"z^-" + sn, PowerMap(-n)}}, v)) {
    return v;
  }
  if ((bps.size() == 2 || bps.size() == 3) && full >= 1 &&
      TryModels(f, SpecialClass::kChebyshevConjugate,
                {{"T_" + sn, Chebyshev(n)},
                 {"-T_" + sn, RatFunc(-Chebyshev(n).num())}}, v)) {
    return v;
  }
  if (LattesCheck(f, portrait, v)) return v;
  v.cls = SpecialClass::kNonSpecial;
  v.model.clear();
  v.mu.reset();
  v.exact = false;
  return v;
}

// ---------------------------------------------------------------------------
// Orbits.

std::optional<ExactPoint> OrbitRecord::at(int k) const {
  if (k < 0) return std::nullopt;
  if (k < static_cast<int>(points.size())) return points[k];
  if (!preperiodic) return std::nullopt;
  auto [tail, period] = *preperiodic;
  return points[tail + (k - tail) % period];
}

OrbitRecord ExactOrbit(const RatFunc& f, const ExactPoint& start, int length,
                       std::size_t bit_cap) {
  OrbitRecord r;
  r.start = start;
  r.points.push_back(start);
  std::unordered_map<ExactPoint, int, PointHash> seen{{start, 0}};
  while (static_cast<int>(r.points.size()) <= length) {
    ExactPoint next = f.eval(r.points.back());
    if (auto it = seen.find(next); it != seen.end()) {
      r.preperiodic = std::make_pair(it->second, static_cast<int>(r.points.size()) - it->second);
      break;
    }
    if (next.bit_size() > bit_cap) {
      r.truncated = true;
      break;
    }
    seen.emplace(next, static_cast<int>(r.points.size()));
    r.points.push_back(std::move(next));
  }
  return r;
}

IntersectReport OrbitIntersect(const RatFunc& A, const ExactPoint& x1,
                               const RatFunc& B, const ExactPoint& x2,
                               int horizon, std::size_t bit_cap) {
  if (A.degree() < 2 || B.degree() < 2) ThrowPrecondition("orbit_intersect: degrees must be >= 2");
  if (horizon < 0) ThrowPrecondition("orbit_intersect: horizon must be >= 0");
  IntersectReport r;
  r.orbit_a = ExactOrbit(A, x1, horizon, bit_cap);
  r.orbit_b = ExactOrbit(B, x2, horizon, bit_cap);
  r.truncated = r.orbit_a.truncated || r.orbit_b.truncated;
  std::unordered_map<ExactPoint, std::vector<int>, PointHash> where;
  for (int l = 0; l <= horizon; ++l) {
    if (auto p = r.orbit_b.at(l)) where[*p].push_back(l);
  }
  for (int k = 0; k <= horizon; ++k) {
    auto p = r.orbit_a.at(k);
    if (!p) break;
    if (auto it = where.find(*p); it != where.end()) {
      for (int l : it->second) r.matches.push_back({k, l, *p});
    }
  }
  std::size_t nontrivial = std::count_if(r.matches.begin(), r.matches.end(),
                                         [](const OrbitMatch& m) { return m.k || m.l; });
  std::ostringstream note;
  if (nontrivial == 0) {
    note << "no match within horizon " << horizon;
  } else {
    note << nontrivial << " nontrivial matches within horizon " << horizon
         << "; a finite search does not decide finiteness";
  }
  if (r.truncated) note << " (orbit truncated at " << bit_cap << " bits)";
  r.note = note.str();
  return r;
}

CommonIterateReport CommonIterateSearch(const RatFunc& A, const RatFunc& B,
                                        int bound, int degree_guard) {
  const int a = A.degree(), b = B.degree();
  if (a < 2 || b < 2) ThrowPrecondition("common_iterate_search: degrees must be >= 2");
  CommonIterateReport r;
  mpz_class da = 1;
  for (int k = 1; k <= bound; ++k) {
    da *= a;
    mpz_class db = 1;
    int l = 0;
    while (db < da) db *= b, ++l;
    if (db != da) continue;
    if (da > degree_guard) {
      r.guard_hit = true;
      break;
    }
    r.tested.emplace_back(k, l);
    if (EqualExact(Iterate(A, k, degree_guard), Iterate(B, l, degree_guard))) {
      r.witness = std::make_pair(k, l);
      break;
    }
  }
  return r;
}

std::vector<int> PrimeDivisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool PrimeSetCheck(const RatFunc& A, const RatFunc& B) {
  if (A.degree() < 2 || B.degree() < 2) ThrowPrecondition("prime_set_check: degrees must be >= 2");
  return PrimeDivisors(A.degree()) == PrimeDivisors(B.degree());
}

std::vector<ExperimentCase> ExperimentCorpus() {
  auto pt = [](long p, long q = 1) { return ExactPoint{false, GaussianRational(mpq_class(p, q))}; };
  RatFunc q1(Poly({1, 0, 1})), q2(Poly({2, 0, 1}));
  RatFunc cubic(Poly({1, -1, 0, 1}));
  return {
      {"z^2 vs z^4", PowerMap(2), PowerMap(4), pt(2), pt(2)},
      {"z^2 vs z^4 shifted", PowerMap(2), PowerMap(4), pt(2), pt(4)},
      {"z^2 vs z^8", PowerMap(2), PowerMap(8), pt(2), pt(2)},
      {"z^2 vs z^3", PowerMap(2), PowerMap(3), pt(2), pt(2)},
      {"z^2 vs z^6", PowerMap(2), PowerMap(6), pt(2), pt(2)},
      {"z^3 vs z^9", PowerMap(3), PowerMap(9), pt(3), pt(3)},
      {"z^-2 vs z^4", PowerMap(-2), PowerMap(4), pt(2), pt(2)},
      {"T_2 vs T_4", Chebyshev(2), Chebyshev(4), pt(3), pt(3)},
      {"T_2 vs T_3", Chebyshev(2), Chebyshev(3), pt(2), pt(2)},
      {"T_3 vs T_9", Chebyshev(3), Chebyshev(9), pt(2), pt(2)},
      {"T_2 vs T_6", Chebyshev(2), Chebyshev(6), pt(2), pt(2)},
      {"z^2+1 vs its square", q1, Iterate(q1, 2), pt(0), pt(0)},
      {"z^2+1 vs z^2+2", q1, q2, pt(0), pt(0)},
      {"z^2+1 vs z^3-z+1", q1, cubic, pt(1), pt(2)},
      {"D_1 vs D_2", DMap(1), DMap(2), pt(3), pt(3)},
      {"Lattes vs z^5", MakeFamily(FamilyKind::kLattesSample), PowerMap(5), pt(1, 2), pt(2)},
  };
}

std::vector<ExperimentResult> RunExperiments(const std::vector<ExperimentCase>& cases,
                                             int horizon, int min_matches,
                                             std::size_t bit_cap) {
  std::vector<std::future<ExperimentResult>> jobs;
  for (const auto& c : cases) {
    jobs.push_back(std::async(std::launch::async, [&c, horizon, min_matches, bit_cap] {
      ExperimentResult r;
      r.input = c;
      r.report = OrbitIntersect(c.A, c.x1, c.B, c.x2, horizon, bit_cap);
      r.same_primes = PrimeSetCheck(c.A, c.B);
      r.violation = static_cast<int>(r.report.matches.size()) >= min_matches && !r.same_primes;
      return r;
    }));
  }
  std::vector<ExperimentResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace rittdyn
