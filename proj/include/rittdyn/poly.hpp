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
#ifndef RITTDYN_POLY_HPP_
#define RITTDYN_POLY_HPP_

#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "rittdyn/gaussian.hpp"

namespace rittdyn {

// Dense univariate polynomial over Q(i), lowest degree first. The leading
// coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  // Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly Constant(GaussianRational c);
  static Poly Monomial(GaussianRational c, int k);
  static Poly X() { return Monomial(1, 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  // Zero for indices past the degree.
  GaussianRational coeff(int k) const;
  const GaussianRational& lead() const { return coeffs_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const;
  Poly monic() const;
  Poly derivative() const;
  // u^d * p(1/u); requires d >= degree().
  Poly reversed(int d) const;
  // p(q(z)).
  Poly compose(const Poly& q) const;

  GaussianRational eval(const GaussianRational& z) const;
  std::complex<double> eval(std::complex<double> z) const;
  std::vector<std::complex<double>> to_complex() const;

  std::size_t max_bit_size() const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder; throws on a zero divisor.
std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b);
// Monic gcd (zero when both inputs are zero).
Poly Gcd(const Poly& a, const Poly& b);

// Yun's algorithm: p = lead * prod_k factors[k-1]^k with pairwise coprime
// monic squarefree factors. Trailing unit factors are dropped.
std::vector<Poly> SquarefreeDecomposition(const Poly& p);

}  // namespace rittdyn

#endif  // RITTDYN_POLY_HPP_
