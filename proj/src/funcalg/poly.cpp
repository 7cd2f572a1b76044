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
#include "rittdyn/poly.hpp"

#include <algorithm>

#include "rittdyn/error.hpp"

namespace rittdyn {

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::Constant(GaussianRational c) {
  return Poly(std::vector<GaussianRational>{std::move(c)});
}

Poly Poly::Monomial(GaussianRational c, int k) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[k];
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) ThrowPrecondition("Poly::pow: negative exponent");
  Poly result = Constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * lead().inverse();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  }
  return Poly(std::move(out));
}

Poly Poly::reversed(int d) const {
  if (is_zero()) return {};
  if (d < degree()) ThrowPrecondition("Poly::reversed: d below degree");
  std::vector<GaussianRational> out(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= degree(); ++k) out[d - k] = coeffs_[k];
  return Poly(std::move(out));
}

Poly Poly::compose(const Poly& q) const {
  Poly result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * q + Constant(*it);
  }
  return result;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + it->to_complex();
  }
  return acc;
}

std::vector<std::complex<double>> Poly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

std::size_t Poly::max_bit_size() const {
  std::size_t bits = 0;
  for (const auto& c : coeffs_) bits = std::max(bits, c.bit_size());
  return bits;
}

std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b) {
  if (b.is_zero()) ThrowPrecondition("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussianRational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<GaussianRational> quot(a.degree() - db + 1);
  GaussianRational inv_lead = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    GaussianRational c = rem[k] * inv_lead;
    for (int j = 0; j <= db; ++j) {
      if (!b.coeffs()[j].is_zero()) rem[k - db + j] -= c * b.coeffs()[j];
    }
    quot[k - db] = std::move(c);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = DivMod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<Poly> SquarefreeDecomposition(const Poly& p) {
  std::vector<Poly> factors;
  if (p.degree() <= 0) return factors;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = Gcd(f, df);
  Poly b = DivMod(f, a).first;
  Poly c = DivMod(df, a).first;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = Gcd(b, d);
    factors.push_back(g);
    b = DivMod(b, g).first;
    c = DivMod(d, g).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace rittdyn
