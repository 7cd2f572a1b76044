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
#include "rittdyn/gaussian.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "rittdyn/error.hpp"

namespace rittdyn {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) ThrowPrecondition("inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) ThrowPrecondition("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::size_t GaussianRational::bit_size() const {
  std::size_t bits = 0;
  for (const mpq_class* q : {&re_, &im_}) {
    bits = std::max(bits, mpz_sizeinbase(q->get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(q->get_den_mpz_t(), 2));
  }
  return bits;
}

std::size_t GaussianRational::hash() const {
  // Low limbs are enough to spread structurally distinct values.
  auto limb = [](const mpz_class& z) -> std::size_t {
    if (sgn(z) == 0) return 0;
    std::size_t h = mpz_getlimbn(z.get_mpz_t(), 0);
    h ^= mpz_size(z.get_mpz_t()) * 0x9e3779b97f4a7c15ULL;
    return sgn(z) < 0 ? ~h : h;
  };
  std::size_t h = limb(re_.get_num());
  for (std::size_t part : {limb(re_.get_den()), limb(im_.get_num()),
                           limb(im_.get_den())}) {
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string GaussianRational::ToString() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag = (im_ == 1) ? "i"
                     : (im_ == -1) ? "-i"
                                   : im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  if (imag[0] == '-') return re_.get_str() + imag;
  return re_.get_str() + "+" + imag;
}

namespace {

std::optional<mpq_class> ParseQ(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return std::nullopt;
  bool slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (slash || k == start || k + 1 == s.size()) return std::nullopt;
      slash = true;
    } else if (s[k] < '0' || s[k] > '9') {
      return std::nullopt;
    }
  }
  mpq_class q;
  std::string body = s[0] == '+' ? s.substr(1) : s;
  if (q.set_str(body, 10) != 0) return std::nullopt;
  if (slash && q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<GaussianRational> GaussianRational::FromString(
    const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    auto q = ParseQ(s);
    if (!q) return std::nullopt;
    return GaussianRational(*q);
  }
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  // Split at the sign that starts the imaginary part, if any.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  auto im = ParseQ(im_text);
  if (!im) return std::nullopt;
  mpq_class re = 0;
  if (!re_text.empty()) {
    auto r = ParseQ(re_text);
    if (!r) return std::nullopt;
    re = *r;
  }
  return GaussianRational(re, *im);
}

std::optional<mpq_class> RationalizeReal(double x, double tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    mpq_class cand(h, k);
    if (std::abs(cand.get_d() - x) <= tol) {
      cand.canonicalize();
      return cand;
    }
    if (frac < 1e-300) break;
    double inv = 1.0 / frac;
    long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

std::optional<GaussianRational> Rationalize(std::complex<double> z, double tol,
                                            long max_den) {
  auto re = RationalizeReal(z.real(), tol, max_den);
  auto im = RationalizeReal(z.imag(), tol, max_den);
  if (!re || !im) return std::nullopt;
  return GaussianRational(*re, *im);
}

namespace {

// Exact k-th root of a nonnegative rational, if it is one.
std::optional<mpq_class> RationalRoot(const mpq_class& q, int k) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num, den;
  if (!mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), k)) return std::nullopt;
  return mpq_class(num, den);
}

}  // namespace

std::vector<GaussianRational> ExactRoots(const GaussianRational& g, int k) {
  std::vector<GaussianRational> roots;
  if (k <= 0) ThrowPrecondition("ExactRoots: k must be positive");
  if (g.is_zero()) return {GaussianRational(0)};
  if (k == 1) return {g};
  // |r|^2 = norm(g)^(1/k) must itself be rational.
  auto modulus_sq = RationalRoot(g.norm(), k);
  if (!modulus_sq) return roots;
  std::complex<double> gz = g.to_complex();
  double rad = std::pow(std::abs(gz), 1.0 / k);
  double arg = std::arg(gz);
  // Denominators of a root divide a power bounded by the modulus data.
  mpz_class den_bound = modulus_sq->get_den() * 4 + 4;
  long max_den = den_bound.fits_slong_p() ? den_bound.get_si() : 1000000000L;
  for (int j = 0; j < k; ++j) {
    double theta = (arg + 2.0 * std::numbers::pi * j) / k;
    std::complex<double> approx = std::polar(rad, theta);
    double tol = 1e-9 * std::max(1.0, rad);
    auto cand = Rationalize(approx, tol, std::max(max_den, 64L));
    if (!cand) continue;
    if (cand->pow(k) != g) continue;
    bool dup = false;
    for (const auto& r : roots) dup = dup || (r == *cand);
    if (!dup) roots.push_back(*cand);
  }
  return roots;
}

}  // namespace rittdyn
