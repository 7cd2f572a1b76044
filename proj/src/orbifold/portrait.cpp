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
#include <cmath>
#include <sstream>

#include "rittdyn/error.hpp"
#include "rittdyn/orbifold.hpp"

namespace rittdyn {

SpherePoint SpherePoint::FromExact(const ExactPoint& p) {
  if (p.infinite) return Infinity();
  return {false, p.value.to_complex(), p.value, 0.0};
}

std::optional<ExactPoint> SpherePoint::as_exact() const {
  if (infinite) return ExactPoint::Infinity();
  if (exact) return ExactPoint{false, *exact};
  return std::nullopt;
}

double SpherePoint::ChordalTo(const SpherePoint& o) const {
  if (infinite && o.infinite) return 0.0;
  if (infinite) return 2.0 / std::sqrt(1.0 + std::norm(o.approx));
  if (o.infinite) return 2.0 / std::sqrt(1.0 + std::norm(approx));
  return 2.0 * Chordal(approx, o.approx);
}

bool SpherePoint::SameAs(const SpherePoint& o, double tol) const {
  if (is_exact() && o.is_exact()) {
    return *as_exact() == *o.as_exact();
  }
  if (infinite != o.infinite) {
    // A numeric point only matches infinity when it is numerically huge.
    return ChordalTo(o) <= tol;
  }
  return ChordalTo(o) <= tol;
}

std::string SpherePoint::ToString() const {
  if (infinite) return "inf";
  if (exact) return exact->ToString();
  std::ostringstream out;
  out.precision(12);
  out << approx.real() << (approx.imag() < 0 ? "" : "+") << approx.imag() << "*i";
  return out.str();
}

bool RamificationPortrait::SatisfiesRiemannHurwitz() const {
  long total = 0;
  for (const auto& b : branch_points) {
    total += degree - static_cast<long>(b.partition.size());
  }
  return total == 2L * degree - 2;
}

int RamificationPortrait::Find(const SpherePoint& p, double tol) const {
  for (std::size_t k = 0; k < branch_points.size(); ++k) {
    if (branch_points[k].value.SameAs(p, tol)) return static_cast<int>(k);
  }
  return -1;
}

namespace {

// Roots of a squarefree polynomial, exact whenever they lie in Q(i).
std::vector<SpherePoint> SquarefreeRoots(const Poly& p, const RootOptions& opts) {
  std::vector<SpherePoint> out;
  if (p.degree() < 1) return out;
  if (p.degree() == 1) {
    GaussianRational r = -p.coeff(0) / p.coeff(1);
    out.push_back(SpherePoint::FromExact({false, r}));
    return out;
  }
  std::vector<Complex> c = p.to_complex();
  for (const Complex& z : SimpleRoots(c, opts)) {
    double scale = std::max(1.0, std::abs(z));
    auto cand = Rationalize(z, 1e-9 * scale);
    if (cand && p.eval(*cand).is_zero()) {
      out.push_back(SpherePoint::FromExact({false, *cand}));
    } else {
      out.push_back(SpherePoint::Numeric(z, 1e-12 * scale));
    }
  }
  return out;
}

SpherePoint ValueAt(const RatFunc& f, const SpherePoint& z) {
  if (auto e = z.as_exact()) return SpherePoint::FromExact(f.eval(*e));
  Complex d = f.den().eval(z.approx);
  Complex n = f.num().eval(z.approx);
  if (std::abs(d) <= 1e-300) return SpherePoint::Infinity();
  Complex v = n / d;
  return SpherePoint::Numeric(v, 1e-12 * std::max(1.0, std::abs(v)));
}

// Local degree of f at infinity and the value f(inf).
std::pair<int, ExactPoint> AtInfinity(const RatFunc& f) {
  const int d = f.degree();
  const int dn = f.num().degree(), dd = f.den().degree();
  ExactPoint value = f.eval(ExactPoint::Infinity());
  if (dn > dd) return {dn - dd, value};
  if (f.num().is_zero() || dn < dd) return {dd - std::max(dn, 0), value};
  Poly rest = f.num() - f.den() * value.value;
  return {rest.is_zero() ? d : d - rest.degree(), value};
}

// Multiplicities of the roots of p, from its squarefree decomposition.
void AppendPartsOf(const Poly& p, std::vector<int>& parts) {
  auto factors = SquarefreeDecomposition(p);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    for (int r = 0; r < factors[j].degree(); ++r) {
      parts.push_back(static_cast<int>(j + 1));
    }
  }
}

// Exact partition over an exact branch value.
std::vector<int> ExactPartition(const RatFunc& f, const ExactPoint& v) {
  std::vector<int> parts;
  auto [e_inf, f_inf] = AtInfinity(f);
  if (v.infinite) {
    AppendPartsOf(f.den(), parts);
  } else {
    AppendPartsOf(f.num() - f.den() * v.value, parts);
  }
  if (f_inf == v) parts.push_back(e_inf);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

RamificationPortrait ComputePortrait(const RatFunc& f,
                                     const PortraitOptions& opts) {
  const int d = f.degree();
  if (d < 2) ThrowPrecondition("ramification portrait needs degree >= 2");
  const Poly& num = f.num();
  const Poly& den = f.den();
  RamificationPortrait portrait;
  portrait.degree = d;

  Poly wronskian = num.derivative() * den - num * den.derivative();
  auto factors = SquarefreeDecomposition(wronskian);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    const int e = static_cast<int>(k) + 2;
    Poly poles = Gcd(factors[k], den);
    Poly finite = DivMod(factors[k], poles).first;
    for (const SpherePoint& c : SquarefreeRoots(poles, opts.roots)) {
      portrait.critical_points.push_back({c, e, SpherePoint::Infinity()});
    }
    for (const SpherePoint& c : SquarefreeRoots(finite, opts.roots)) {
      portrait.critical_points.push_back({c, e, ValueAt(f, c)});
    }
  }
  auto [e_inf, f_inf] = AtInfinity(f);
  if (e_inf >= 2) {
    portrait.critical_points.push_back(
        {SpherePoint::Infinity(), e_inf, SpherePoint::FromExact(f_inf)});
  }

  // Group critical points by critical value; exact values take precedence.
  std::vector<BranchPoint>& groups = portrait.branch_points;
  for (std::size_t i = 0; i < portrait.critical_points.size(); ++i) {
    const SpherePoint& v = portrait.critical_points[i].value;
    bool placed = false;
    for (auto& g : groups) {
      if (g.value.SameAs(v, opts.value_cluster_tol)) {
        g.critical.push_back(i);
        if (!g.value.is_exact() && v.is_exact()) g.value = v;
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({v, {}, false, {i}});
  }

  for (auto& g : groups) {
    int ramified = 0;
    for (std::size_t i : g.critical) {
      g.partition.push_back(portrait.critical_points[i].local_degree);
      ramified += portrait.critical_points[i].local_degree;
    }
    if (ramified > d) {
      ThrowInternal("critical points over " + g.value.ToString() +
                    " exceed the degree; clustering tolerance too coarse");
    }
    g.partition.insert(g.partition.end(), d - ramified, 1);
    std::sort(g.partition.rbegin(), g.partition.rend());

    if (!g.value.is_exact()) {
      double scale = std::max(1.0, std::abs(g.value.approx));
      if (auto cand = Rationalize(g.value.approx, 1e-9 * scale)) {
        Poly pv = num - den * *cand;
        Poly common = Gcd(pv, pv.derivative());
        int expected = 0;
        for (std::size_t i : g.critical) {
          expected += portrait.critical_points[i].local_degree - 1;
        }
        if (common.degree() == expected) {
          g.value = SpherePoint::FromExact({false, *cand});
        }
      }
    }
    if (auto ev = g.value.as_exact()) {
      std::vector<int> exact = ExactPartition(f, *ev);
      if (exact != g.partition) {
        ThrowInternal("numeric partition over " + g.value.ToString() +
                      " disagrees with exact factorization");
      }
      g.exact_partition = true;
    }
  }

  std::sort(groups.begin(), groups.end(),
            [](const BranchPoint& a, const BranchPoint& b) {
              if (a.value.infinite != b.value.infinite) return b.value.infinite;
              if (a.value.approx.real() != b.value.approx.real()) {
                return a.value.approx.real() < b.value.approx.real();
              }
              return a.value.approx.imag() < b.value.approx.imag();
            });

  if (!portrait.SatisfiesRiemannHurwitz()) {
    ThrowInternal("ramification portrait violates Riemann-Hurwitz; "
                  "clustering tolerance too coarse");
  }
  return portrait;
}

std::vector<std::pair<SpherePoint, int>> FiberWithDegrees(
    const RatFunc& f, const RamificationPortrait& portrait,
    std::size_t branch_index, const PortraitOptions& opts) {
  const BranchPoint& b = portrait.branch_points.at(branch_index);
  std::vector<std::pair<SpherePoint, int>> fiber;
  auto [e_inf, f_inf] = AtInfinity(f);
  if (auto ev = b.value.as_exact()) {
    Poly p = ev->infinite ? f.den() : f.num() - f.den() * ev->value;
    auto factors = SquarefreeDecomposition(p);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      for (const SpherePoint& z : SquarefreeRoots(factors[j], opts.roots)) {
        fiber.emplace_back(z, static_cast<int>(j + 1));
      }
    }
    if (f_inf == *ev) fiber.emplace_back(SpherePoint::Infinity(), e_inf);
    return fiber;
  }
  // Numeric value: ramified points come from the portrait, the rest from a
  // root solve with the ramified clusters removed.
  std::vector<Complex> c(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k) {
    c[k] = f.num().coeff(k).to_complex() - b.value.approx * f.den().coeff(k).to_complex();
  }
  std::vector<Complex> roots = SimpleRoots(c, opts.roots);
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i : b.critical) {
    const CriticalPoint& cp = portrait.critical_points[i];
    fiber.emplace_back(cp.point, cp.local_degree);
    for (int r = 0; r < cp.local_degree; ++r) {
      int best = -1;
      double best_d = 0;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        double dist = std::abs(roots[j] - cp.point.approx);
        if (best < 0 || dist < best_d) {
          best = static_cast<int>(j);
          best_d = dist;
        }
      }
      if (best < 0) ThrowInternal("fiber root count mismatch");
      used[best] = true;
    }
  }
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (!used[j]) fiber.emplace_back(SpherePoint::Numeric(roots[j]), 1);
  }
  return fiber;
}

}  // namespace rittdyn
