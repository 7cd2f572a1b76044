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
#ifndef RITTDYN_RATFUNC_HPP_
#define RITTDYN_RATFUNC_HPP_

#include <array>
#include <complex>
#include <string>

#include "rittdyn/gaussian.hpp"
#include "rittdyn/poly.hpp"

namespace rittdyn {

// Default cap on the degree of any function built by Compose or Iterate.
inline constexpr int kDefaultDegreeGuard = 1 << 10;

// A point of Q(i) u {inf}.
struct ExactPoint {
  bool infinite = false;
  GaussianRational value;

  static ExactPoint Infinity() { return {true, {}}; }
  friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  std::size_t hash() const { return infinite ? 0x51ed27ULL : value.hash(); }
  std::string ToString() const { return infinite ? "inf" : value.ToString(); }
  std::size_t bit_size() const { return infinite ? 0 : value.bit_size(); }
};

// Rational function num/den over Q(i) in canonical form: gcd(num, den) = 1
// and den monic. Two functions are equal iff their canonical forms match.
class RatFunc {
 public:
  RatFunc() : num_(), den_({1}) {}
  // Throws ErrorKind::kPrecondition on a zero denominator.
  RatFunc(Poly num, Poly den);
  RatFunc(Poly p) : num_(std::move(p)), den_({1}) {}  // NOLINT

  static RatFunc Identity() { return RatFunc(Poly::X()); }
  static RatFunc Constant(GaussianRational c) {
    return RatFunc(Poly::Constant(std::move(c)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const;
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return degree() == 0; }

  ExactPoint eval(const ExactPoint& z) const;
  // Numeric value; returns a huge magnitude near poles rather than inf.
  std::complex<double> eval(std::complex<double> z) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  // Canonical text form accepted back by the expression parser.
  std::string ToString() const;

 private:
  Poly num_;
  Poly den_;
};

// Degree-one rational map (a z + b) / (c z + d) with ad - bc != 0.
class Mobius {
 public:
  Mobius() : m_{1, 0, 0, 1} {}
  // Throws ErrorKind::kPrecondition when ad - bc = 0.
  Mobius(GaussianRational a, GaussianRational b, GaussianRational c,
         GaussianRational d);
  // Throws unless f has degree one.
  static Mobius FromRatFunc(const RatFunc& f);
  // The unique map sending p0, p1, p2 to 0, 1, inf.
  static Mobius ToZeroOneInf(const ExactPoint& p0, const ExactPoint& p1,
                             const ExactPoint& p2);

  const GaussianRational& a() const { return m_[0]; }
  const GaussianRational& b() const { return m_[1]; }
  const GaussianRational& c() const { return m_[2]; }
  const GaussianRational& d() const { return m_[3]; }

  Mobius inverse() const;
  // this o other.
  Mobius then_after(const Mobius& other) const;
  RatFunc as_ratfunc() const;
  ExactPoint apply(const ExactPoint& z) const;
  std::string ToString() const { return as_ratfunc().ToString(); }

 private:
  std::array<GaussianRational, 4> m_;
};

// f(g(z)). Both arguments must be nonconstant.
RatFunc Compose(const RatFunc& f, const RatFunc& g,
                int degree_guard = kDefaultDegreeGuard);
// d-fold composition of f with itself, d >= 1.
RatFunc Iterate(const RatFunc& f, int d, int degree_guard = kDefaultDegreeGuard);
// mu^{-1} o f o mu.
RatFunc Conjugate(const RatFunc& f, const Mobius& mu);
bool EqualExact(const RatFunc& f, const RatFunc& g);
RatFunc Derivative(const RatFunc& f);

}  // namespace rittdyn

#endif  // RITTDYN_RATFUNC_HPP_
