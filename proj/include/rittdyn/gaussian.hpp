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
#ifndef RITTDYN_GAUSSIAN_HPP_
#define RITTDYN_GAUSSIAN_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rittdyn {

// Exact element a + b*i of Q(i). GMP keeps both parts in lowest terms.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(runtime/explicit)
  GaussianRational(mpq_class re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational I() { return GaussianRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  // Throws on zero.
  GaussianRational inverse() const;
  GaussianRational pow(long e) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  // Largest bit length among the four integers making up the value.
  std::size_t bit_size() const;
  std::size_t hash() const;

  // "p/q", "p/q*i" or "p/q+r/s*i"; integers print without denominator.
  std::string ToString() const;
  // Inverse of ToString. Returns nullopt on malformed input.
  static std::optional<GaussianRational> FromString(const std::string& s);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Best rational approximation of x with denominator <= max_den, by
// continued fractions. Returns nullopt when no convergent lands within tol.
std::optional<mpq_class> RationalizeReal(double x, double tol,
                                         long max_den = 1000000);
std::optional<GaussianRational> Rationalize(std::complex<double> z, double tol,
                                            long max_den = 1000000);

// Exact k-th roots of g lying in Q(i). Empty when none exist.
std::vector<GaussianRational> ExactRoots(const GaussianRational& g, int k);

}  // namespace rittdyn

template <>
struct std::hash<rittdyn::GaussianRational> {
  std::size_t operator()(const rittdyn::GaussianRational& g) const {
    return g.hash();
  }
};

#endif  // RITTDYN_GAUSSIAN_HPP_
