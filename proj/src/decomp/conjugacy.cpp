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
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

#include "decomp/internal.hpp"
#include "rittdyn/decomp.hpp"
#include "rittdyn/numerics.hpp"
#include "rittdyn/orbifold.hpp"

namespace rittdyn {

namespace {

using internal::HPoint;

// Conjugates f by z -> z + t so the z^(n-1) coefficient vanishes.
Poly Center(const Poly& f, GaussianRational& t) {
  int n = f.degree();
  t = -f.coeff(n - 1) * (f.lead() * GaussianRational(n)).inverse();
  return f.compose(Poly(std::vector<GaussianRational>{t, 1})) - Poly::Constant(t);
}

// a^e for a possibly negative integer e.
GaussianRational Power(const GaussianRational& a, long e) {
  return e >= 0 ? a.pow(e) : a.inverse().pow(-e);
}

ConjugacyResult PolyConjugate(const Poly& f, const Poly& g) {
  ConjugacyResult res;
  res.exact = true;
  GaussianRational tf, tg;
  Poly fc = Center(f, tf), gc = Center(g, tg);
  const int n = f.degree();
  // g_c(z) = f_c(alpha z) / alpha, so g_k = f_k alpha^(k-1).
  long e = 0;
  std::vector<std::pair<long, GaussianRational>> eqs;  // alpha^exp = ratio
  for (int k = 0; k <= n; ++k) {
    bool fz = fc.coeff(k).is_zero(), gz = gc.coeff(k).is_zero();
    if (fz != gz) {
      res.witness = "coefficient supports differ";
      return res;
    }
    if (fz) continue;
    GaussianRational r = gc.coeff(k) * fc.coeff(k).inverse();
    if (k == 1) {
      if (!(r == GaussianRational(1))) {
        res.witness = "linear coefficients differ";
        return res;
      }
      continue;
    }
    eqs.push_back({k - 1, r});
    e = std::gcd(e, static_cast<long>(std::abs(k - 1)));
  }
  // mu = alpha^e from a Bezout combination of the exponents.
  GaussianRational mu = 1;
  long acc = 0;
  for (const auto& [ek, r] : eqs) {
    if (acc == 0) {
      mu = ek > 0 ? r : r.inverse();
      acc = std::abs(ek);
      continue;
    }
    // Extended gcd of acc and |ek|.
    long a = acc, b = std::abs(ek), x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      long q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    GaussianRational rk = ek > 0 ? r : r.inverse();
    mu = Power(mu, x0) * Power(rk, y0);
    acc = a;
  }
  for (const auto& [ek, r] : eqs) {
    if (!(Power(mu, ek / e) == r)) {
      res.witness = "no scaling alpha fits every coefficient";
      return res;
    }
  }
  res.conjugate = true;
  std::ostringstream w;
  w << "mu(z) = alpha*(z - (" << tg.ToString() << ")) + (" << tf.ToString()
    << ") with alpha^" << e << " = " << mu.ToString();
  auto roots = ExactRoots(mu, static_cast<int>(e));
  if (!roots.empty()) {
    const GaussianRational& alpha = roots.front();
    res.mu = Mobius(alpha, tf - alpha * tg, 0, 1);
    w << ", alpha = " << alpha.ToString();
  }
  res.witness = w.str();
  return res;
}

struct Marked {
  HPoint p;
  int local_degree;
  int fixed_mult;
};

std::vector<Marked> MarkedPoints(const RatFunc& f) {
  std::vector<Marked> out;
  auto add = [&](HPoint p, int ld, int fm) {
    for (auto& m : out) {
      if (internal::ChordalH(m.p, p) < 1e-7) {
        m.local_degree = std::max(m.local_degree, ld);
        m.fixed_mult = std::max(m.fixed_mult, fm);
        return;
      }
    }
    out.push_back({p, ld, fm});
  };
  auto portrait = ComputePortrait(f);
  for (const auto& c : portrait.critical_points) {
    add(c.point.infinite ? HPoint::Inf() : HPoint::Finite(c.point.approx), c.local_degree, 0);
  }
  Poly fix = f.num() - Poly::X() * f.den();
  int total = 0;
  for (const auto& r : AllRoots(fix)) {
    add(HPoint::Finite(r.point.z), 1, r.multiplicity);
    total += r.multiplicity;
  }
  if (total < f.degree() + 1) add(HPoint::Inf(), 1, f.degree() + 1 - total);
  // Critical points that are not fixed keep fixed_mult 0; fixed points
  // that are not critical keep local degree 1.
  return out;
}

ConjugacyResult RationalConjugate(const RatFunc& f, const RatFunc& g) {
  ConjugacyResult res;
  auto mf = MarkedPoints(f), mg = MarkedPoints(g);
  if (mg.size() < 3 || mf.size() != mg.size()) {
    res.witness = mg.size() < 3 ? "too few marked points" : "marked point counts differ";
    return res;
  }
  auto same_tag = [](const Marked& a, const Marked& b) {
    return a.local_degree == b.local_degree && a.fixed_mult == b.fixed_mult;
  };
  // Pick the three g-points with the rarest tags to keep the search small.
  std::vector<std::size_t> order(mg.size());
  std::iota(order.begin(), order.end(), 0);
  auto rarity = [&](std::size_t i) {
    return std::count_if(mf.begin(), mf.end(), [&](const Marked& m) { return same_tag(m, mg[i]); });
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rarity(a) < rarity(b); });
  const Marked& g0 = mg[order[0]];
  const Marked& g1 = mg[order[1]];
  const Marked& g2 = mg[order[2]];
  auto src = internal::ToZeroOneInf(g0.p, g1.p, g2.p);
  internal::HFunc hf(f), hg(g);
  const HPoint tests[] = {HPoint::Finite({0.21, -0.37}), HPoint::Finite({-1.3, 0.4}),
                          HPoint::Finite({2.2, 1.1}), HPoint::Finite({0.05, 0.9})};
  bool numeric_match = false;
  for (const auto& a : mf) {
    if (!same_tag(a, g0)) continue;
    for (const auto& b : mf) {
      if (&b == &a || !same_tag(b, g1)) continue;
      for (const auto& c : mf) {
        if (&c == &a || &c == &b || !same_tag(c, g2)) continue;
        auto mu = internal::Mul(internal::Inv(internal::ToZeroOneInf(a.p, b.p, c.p)), src);
        bool ok = true;
        for (const auto& t : tests) {
          ok = ok && internal::ChordalH(internal::Apply(mu, hg(t)),
                                        hf(internal::Apply(mu, t))) < 1e-7;
        }
        if (!ok) continue;
        numeric_match = true;
        auto exact = internal::RationalizeMobius(mu);
        if (exact && EqualExact(Conjugate(f, *exact), g)) {
          res.conjugate = true;
          res.exact = true;
          res.mu = exact;
          res.witness = "mu(z) = " + exact->ToString();
          return res;
        }
      }
    }
  }
  res.conjugate = numeric_match;
  res.witness = numeric_match ? "numeric conjugacy without an exact Q(i) witness"
                              : "no alignment of marked points conjugates";
  return res;
}

}  // namespace

ConjugacyResult TestConjugate(const RatFunc& f, const RatFunc& g) {
  if (f.degree() != g.degree()) {
    ConjugacyResult r;
    r.exact = true;
    r.witness = "degrees differ";
    return r;
  }
  if (EqualExact(f, g)) {
    ConjugacyResult r;
    r.conjugate = r.exact = true;
    r.mu = Mobius();
    r.witness = "identical";
    return r;
  }
  if (f.is_polynomial() && g.is_polynomial() && f.degree() >= 2) {
    return PolyConjugate(f.num(), g.num());
  }
  return RationalConjugate(f, g);
}

}  // namespace rittdyn
