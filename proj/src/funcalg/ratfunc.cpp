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
#include "rittdyn/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "rittdyn/error.hpp"

namespace rittdyn {

namespace {

std::string RenderPoly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussianRational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class a = abs(c.re());
      if (a != 1 || k == 0) mag = a.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class a = abs(c.im());
      mag = (a == 1) ? "i" : a.get_str() + "*i";
    } else {
      mag = "(" + c.ToString() + ")";
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string var = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (mag.empty()) {
      out << var;
    } else if (var.empty()) {
      out << mag;
    } else {
      out << mag << "*" << var;
    }
  }
  return out.str();
}

// Homogenized evaluation sum_k p_k a^k b^(d-k) from precomputed powers.
Poly Homogenize(const Poly& p, int d, const std::vector<Poly>& a_pows,
                const std::vector<Poly>& b_pows) {
  Poly acc;
  for (int k = 0; k <= p.degree(); ++k) {
    const GaussianRational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    acc += (a_pows[k] * b_pows[d - k]) * c;
  }
  return acc;
}

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) ThrowPrecondition("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly({1});
    return;
  }
  if (den_.degree() > 0) {
    Poly g = Gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = DivMod(num_, g).first;
      den_ = DivMod(den_, g).first;
    }
  }
  GaussianRational inv = den_.lead().inverse();
  if (!inv.is_one()) {
    num_ *= inv;
    den_ *= inv;
  }
}

int RatFunc::degree() const {
  return std::max(std::max(num_.degree(), den_.degree()), 0);
}

ExactPoint RatFunc::eval(const ExactPoint& z) const {
  if (z.infinite) {
    int dn = num_.degree(), dd = den_.degree();
    if (num_.is_zero()) return {false, {}};
    if (dn > dd) return ExactPoint::Infinity();
    if (dn < dd) return {false, {}};
    return {false, num_.lead() / den_.lead()};
  }
  GaussianRational d = den_.eval(z.value);
  if (d.is_zero()) return ExactPoint::Infinity();
  return {false, num_.eval(z.value) / d};
}

std::complex<double> RatFunc::eval(std::complex<double> z) const {
  std::complex<double> d = den_.eval(z);
  std::complex<double> n = num_.eval(z);
  if (std::abs(d) == 0.0) return {1e300, 0.0};
  return n / d;
}

std::string RatFunc::ToString() const {
  if (den_.degree() == 0) return RenderPoly(num_);
  return "(" + RenderPoly(num_) + ")/(" + RenderPoly(den_) + ")";
}

Mobius::Mobius(GaussianRational a, GaussianRational b, GaussianRational c,
               GaussianRational d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) {
    ThrowPrecondition("Mobius transformation with ad - bc = 0");
  }
}

Mobius Mobius::FromRatFunc(const RatFunc& f) {
  if (f.degree() != 1) ThrowPrecondition("Mobius::FromRatFunc: degree != 1");
  return Mobius(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1),
                f.den().coeff(0));
}

Mobius Mobius::ToZeroOneInf(const ExactPoint& p0, const ExactPoint& p1,
                            const ExactPoint& p2) {
  if (p0 == p1 || p1 == p2 || p0 == p2) {
    ThrowPrecondition("ToZeroOneInf: points must be distinct");
  }
  // z -> (z - p0)(p1 - p2) / ((z - p2)(p1 - p0)), with inf terms dropped.
  GaussianRational a, b, c, d;
  if (p0.infinite) {
    // (p1 - p2) / (z - p2)
    a = 0;
    b = p1.value - p2.value;
    c = 1;
    d = -p2.value;
  } else if (p1.infinite) {
    // (z - p0) / (z - p2)
    a = 1;
    b = -p0.value;
    c = 1;
    d = -p2.value;
  } else if (p2.infinite) {
    // (z - p0) / (p1 - p0)
    a = 1;
    b = -p0.value;
    c = 0;
    d = p1.value - p0.value;
  } else {
    GaussianRational s = p1.value - p2.value, t = p1.value - p0.value;
    a = s;
    b = -p0.value * s;
    c = t;
    d = -p2.value * t;
  }
  return Mobius(a, b, c, d);
}

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Mobius Mobius::then_after(const Mobius& o) const {
  return Mobius(a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(),
                c() * o.a() + d() * o.c(), c() * o.b() + d() * o.d());
}

RatFunc Mobius::as_ratfunc() const {
  return RatFunc(Poly(std::vector<GaussianRational>{b(), a()}),
                 Poly(std::vector<GaussianRational>{d(), c()}));
}

ExactPoint Mobius::apply(const ExactPoint& z) const {
  if (z.infinite) {
    if (c().is_zero()) return ExactPoint::Infinity();
    return {false, a() / c()};
  }
  GaussianRational den = c() * z.value + d();
  if (den.is_zero()) return ExactPoint::Infinity();
  return {false, (a() * z.value + b()) / den};
}

RatFunc Compose(const RatFunc& f, const RatFunc& g, int degree_guard) {
  if (f.is_constant() || g.is_constant()) {
    ThrowPrecondition("Compose: arguments must be nonconstant");
  }
  const long required = static_cast<long>(f.degree()) * g.degree();
  if (required > degree_guard) {
    ThrowPrecondition("degree guard exceeded: composition has degree " +
                      std::to_string(required) + ", guard is " +
                      std::to_string(degree_guard));
  }
  const int d = f.degree();
  std::vector<Poly> a_pows{Poly({1})}, b_pows{Poly({1})};
  for (int k = 1; k <= d; ++k) {
    a_pows.push_back(a_pows.back() * g.num());
    b_pows.push_back(b_pows.back() * g.den());
  }
  return RatFunc(Homogenize(f.num(), d, a_pows, b_pows),
                 Homogenize(f.den(), d, a_pows, b_pows));
}

RatFunc Iterate(const RatFunc& f, int d, int degree_guard) {
  if (d < 1) ThrowPrecondition("Iterate: d must be >= 1");
  if (f.degree() < 2) ThrowPrecondition("Iterate: degree must be >= 2");
  long required = 1;
  for (int k = 0; k < d; ++k) {
    required *= f.degree();
    if (required > degree_guard) {
      // Report the full requirement, not the first overflow.
      long full = 1;
      for (int j = 0; j < d && full <= (1L << 40); ++j) full *= f.degree();
      ThrowPrecondition("degree guard exceeded: iterate has degree " +
                        std::to_string(full) + ", guard is " +
                        std::to_string(degree_guard));
    }
  }
  // Binary powering keeps intermediate compositions balanced.
  RatFunc result = f;
  RatFunc base = f;
  int e = d - 1;
  while (e > 0) {
    if (e & 1) result = Compose(base, result, degree_guard);
    e >>= 1;
    if (e > 0) base = Compose(base, base, degree_guard);
  }
  return result;
}

RatFunc Conjugate(const RatFunc& f, const Mobius& mu) {
  return Compose(mu.inverse().as_ratfunc(), Compose(f, mu.as_ratfunc()));
}

bool EqualExact(const RatFunc& f, const RatFunc& g) { return f == g; }

RatFunc Derivative(const RatFunc& f) {
  const Poly& n = f.num();
  const Poly& d = f.den();
  return RatFunc(n.derivative() * d - n * d.derivative(), d * d);
}

}  // namespace rittdyn
