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
#include <array>
#include <cmath>
#include <sstream>

#include "decomp/internal.hpp"
#include "rittdyn/decomp.hpp"
#include "rittdyn/error.hpp"

namespace rittdyn {

namespace internal {
std::optional<RatFunc> DivideLeftPoly(const Poly& A, const Poly& D);
}  // namespace internal

namespace {

using internal::HPoint;

// Generic probe values for fibers, away from the usual special points.
const Complex kProbeValues[] = {{0.3137, 0.2718}, {-0.5772, 0.6931}, {1.4142, -0.7321},
                                {-1.1892, -0.4142}, {0.8862, 1.2599}};

double DistanceToBranching(const RamificationPortrait& p, const SpherePoint& w) {
  double best = 2;
  for (const auto& b : p.branch_points) best = std::min(best, b.value.ChordalTo(w));
  return best;
}

struct Probe {
  GaussianRational x;
  Complex w;
};

// Rational points whose values are finite, distinct and unbranched, with
// no pole of f in their fibers.
std::vector<Probe> ChooseProbes(const RatFunc& f,
                                               const RamificationPortrait& portrait) {
  ExactPoint at_inf = f.eval(ExactPoint{true, {}});
  std::vector<Probe> out;
  for (const auto& x : internal::ProbePoints()) {
    ExactPoint w = f.eval(ExactPoint{false, x});
    if (w.infinite) continue;
    if (!at_inf.infinite && at_inf.value == w.value) continue;
    SpherePoint sw = SpherePoint::FromExact(w);
    if (DistanceToBranching(portrait, sw) < 1e-4) continue;
    if (!at_inf.infinite && SpherePoint::FromExact(at_inf).ChordalTo(sw) < 1e-4) continue;
    bool distinct = true;
    for (const auto& p : out) distinct = distinct && std::abs(p.w - w.value.to_complex()) > 1e-6;
    if (!distinct) continue;
    out.push_back({x, w.value.to_complex()});
  }
  return out;
}

void Polish(const NumericMap& map, Complex w, Complex& z) {
  const auto& n = map.num(0);
  const auto& d = map.den(0);
  for (int it = 0; it < 4; ++it) {
    Complex g = 0, dg = 0;
    for (std::size_t k = n.size(); k-- > 0;) {
      dg = dg * z + g;
      g = g * z + (n[k] - w * d[k]);
    }
    if (dg == Complex(0)) return;
    z -= g / dg;
  }
}

// Base fiber carried to the fiber over w, trying a detour if the straight
// segment fails.
std::vector<Complex> CarryFiber(const NumericMap& map, const MonodromyData& m, Complex w) {
  std::vector<ComplexPoint> start;
  for (Complex z : m.fiber_labels) start.push_back({z, 0.0});
  Complex b = m.base_point.z;
  std::optional<Error> last;
  for (double bend : {0.0, 0.35, -0.35, 0.7}) {
    Complex mid = 0.5 * (b + w) + Complex(0, bend) * (w - b);
    std::vector<Complex> path = bend == 0.0 ? std::vector<Complex>{b, w}
                                            : std::vector<Complex>{b, mid, w};
    try {
      auto end = TrackPath(map, path, start);
      for (Complex& z : end) Polish(map, w, z);
      return end;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNumeric) throw;
      last = e;
    }
  }
  throw *last;
}

std::vector<Complex> ProductOfRoots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1};
  for (Complex r : roots) {
    c.push_back(0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return c;
}

std::optional<Poly> RationalizePoly(const std::vector<Complex>& c) {
  std::vector<GaussianRational> q;
  for (Complex v : c) {
    auto r = Rationalize(v, 1e-10 * std::max(1.0, std::abs(v)), 10000000);
    if (!r) return std::nullopt;
    q.push_back(*r);
  }
  return Poly(std::move(q));
}

Complex EvalC(const std::vector<Complex>& c, Complex z) {
  Complex v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

}  // namespace

namespace {

struct Carried {
  Probe probe;
  std::vector<Complex> fiber;
  int label;  // index of the probe point itself in the carried fiber
};

// lambda * P0 / P1 with P_k the monic polynomial vanishing on the block of
// the k-th probe, scaled so the third probe maps to 1.
void NumericFactor(const BlockSystem& bs, const Carried* c[3], std::vector<Complex>& num,
                   std::vector<Complex>& den) {
  auto block_points = [&](const Carried& k) {
    std::vector<Complex> pts;
    for (const auto& blk : bs.blocks) {
      if (std::find(blk.begin(), blk.end(), k.label) == blk.end()) continue;
      for (int j : blk) pts.push_back(k.fiber[j]);
    }
    return pts;
  };
  num = ProductOfRoots(block_points(*c[0]));
  den = ProductOfRoots(block_points(*c[1]));
  Complex x2 = c[2]->probe.x.to_complex();
  Complex lambda = EvalC(den, x2) / EvalC(num, x2);
  for (auto& v : num) v *= lambda;
}

}  // namespace

std::vector<DecompClass> DecomposeFromBlocks(const RatFunc& f, const MonodromyData& m) {
  std::vector<DecompClass> out;
  auto systems = BlockSystems(m);
  if (systems.empty()) return out;
  auto probes = ChooseProbes(f, ComputePortrait(f));
  if (probes.size() < 3) ThrowNumeric("decompose: no usable rational probe points");
  NumericMap map(f);
  std::vector<Carried> carried;
  for (const auto& p : probes) {
    if (carried.size() == 5) break;
    auto fib = CarryFiber(map, m, p.w);
    Complex x = p.x.to_complex();
    std::size_t best = 0;
    for (std::size_t j = 1; j < fib.size(); ++j) {
      if (std::abs(fib[j] - x) < std::abs(fib[best] - x)) best = j;
    }
    if (std::abs(fib[best] - x) > 1e-6 * std::max(1.0, std::abs(x))) {
      ThrowNumeric("decompose: probe point lost while carrying the fiber");
    }
    carried.push_back({p, std::move(fib), static_cast<int>(best)});
  }
  // Probe triples tried in order; the first gives the numeric fallback.
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < static_cast<int>(carried.size()); ++a) {
    for (int b = 0; b < static_cast<int>(carried.size()); ++b) {
      for (int c = 0; c < static_cast<int>(carried.size()); ++c) {
        if (a != b && b != c && a != c && triples.size() < 12) triples.push_back({a, b, c});
      }
    }
  }
  for (const auto& bs : systems) {
    DecompClass cls;
    cls.blocks = bs;
    for (const auto& t : triples) {
      const Carried* c[3] = {&carried[t[0]], &carried[t[1]], &carried[t[2]]};
      std::vector<Complex> num, den;
      NumericFactor(bs, c, num, den);
      if (cls.numeric_num.empty()) {
        cls.numeric_num = num;
        cls.numeric_den = den;
      }
      auto pn = RationalizePoly(num), pd = RationalizePoly(den);
      if (!pn || !pd || pd->is_zero()) continue;
      RatFunc V(*pn, *pd);
      if (V.degree() != bs.block_size) continue;
      auto U = DivideRight(f, V);
      if (!U) continue;
      std::ostringstream norm;
      norm << "V(" << c[0]->probe.x.ToString() << ") = 0, V(" << c[1]->probe.x.ToString()
           << ") = inf, V(" << c[2]->probe.x.ToString() << ") = 1";
      cls.U = *U;
      cls.V = V;
      cls.normalization = norm.str();
      cls.numeric_num.clear();
      cls.numeric_den.clear();
      break;
    }
    if (!cls.numeric_num.empty()) {
      cls.status = FactorStatus::kNumericOnly;
      cls.U = f;
      cls.V = RatFunc::Identity();
      cls.normalization = "numeric only";
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<DecompClass> Decompose(const RatFunc& f, std::uint64_t seed) {
  if (f.degree() < 2) ThrowPrecondition("decompose: degree must be at least 2");
  if (f.is_polynomial()) return PolyDecompose(f.num());
  return DecomposeFromBlocks(f, Monodromy(f, std::nullopt, seed));
}

std::optional<Mobius> FindLeftMobius(const RatFunc& U, const RatFunc& D) {
  const int d = D.degree();
  if (U.degree() != d || d < 1) return std::nullopt;
  if (d == 1) {
    Mobius mu = Mobius::FromRatFunc(D).inverse().then_after(Mobius::FromRatFunc(U));
    return mu;
  }
  auto pu = ComputePortrait(U), pd = ComputePortrait(D);
  std::vector<Complex> ws;
  for (Complex w : kProbeValues) {
    SpherePoint sw = SpherePoint::Numeric(w);
    if (DistanceToBranching(pu, sw) > 1e-3 && DistanceToBranching(pd, sw) > 1e-3) ws.push_back(w);
  }
  if (ws.size() < 2) return std::nullopt;
  auto fu1 = internal::FiberH(U, ws[0]), fu2 = internal::FiberH(U, ws[1]);
  auto fd1 = internal::FiberH(D, ws[0]), fd2 = internal::FiberH(D, ws[1]);
  internal::HFunc hu(U), hd(D);
  auto src = internal::ToZeroOneInf(fu1[0], fu1[1], fu2[0]);
  const HPoint tests[] = {HPoint::Finite({0.21, -0.37}), HPoint::Finite({-1.3, 0.4}),
                          HPoint::Finite({2.2, 1.1}), HPoint::Inf()};
  for (std::size_t a = 0; a < fd1.size(); ++a) {
    for (std::size_t b = 0; b < fd1.size(); ++b) {
      if (a == b) continue;
      for (std::size_t c = 0; c < fd2.size(); ++c) {
        auto mu = internal::Mul(internal::Inv(internal::ToZeroOneInf(fd1[a], fd1[b], fd2[c])), src);
        bool ok = true;
        for (const auto& t : tests) {
          ok = ok && internal::ChordalH(hd(internal::Apply(mu, t)), hu(t)) < 1e-7;
        }
        if (!ok) continue;
        auto exact = internal::RationalizeMobius(mu);
        if (exact && EqualExact(Compose(D, exact->as_ratfunc()), U)) return exact;
      }
    }
  }
  return std::nullopt;
}

DivideLeftResult DivideLeft(const RatFunc& A, const RatFunc& D, std::uint64_t seed) {
  DivideLeftResult res;
  const int a = A.degree(), d = D.degree();
  if (d < 1 || a % d != 0) {
    res.note = "deg D does not divide deg A";
    return res;
  }
  if (A.is_polynomial() && D.is_polynomial()) {
    res.R = internal::DivideLeftPoly(A.num(), D.num());
    if (!res.R) res.note = "no polynomial right factor over Q(i)";
    return res;
  }
  if (d == 1) {
    res.R = Compose(Mobius::FromRatFunc(D).inverse().as_ratfunc(), A);
    return res;
  }
  const int g = a / d;
  if (g == 1) {
    if (auto mu = FindLeftMobius(A, D)) res.R = mu->as_ratfunc();
    else res.note = "no Mobius map mu with D o mu = A";
    return res;
  }
  for (const auto& cls : Decompose(A, seed)) {
    if (cls.V.degree() != g && cls.status == FactorStatus::kExact) continue;
    if (cls.status == FactorStatus::kNumericOnly) {
      if (cls.blocks && cls.blocks->block_size == g) res.numeric_witness = true;
      continue;
    }
    if (auto mu = FindLeftMobius(cls.U, D)) {
      RatFunc R = Compose(mu->as_ratfunc(), cls.V);
      if (EqualExact(Compose(D, R), A)) {
        res.R = R;
        return res;
      }
    }
  }
  res.note = res.numeric_witness ? "right factor found only numerically"
                                 : "no decomposition A = D o R";
  return res;
}

}  // namespace rittdyn
