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

#include "decomp/internal.hpp"

namespace rittdyn::internal {

std::optional<std::vector<GaussianRational>> KernelVector(
    std::vector<std::vector<GaussianRational>> rows, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    GaussianRational inv = rows[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      GaussianRational f = rows[q][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (pivot_col.size() == cols) return std::nullopt;
  // First free column gets 1, the pivots follow from the reduced rows.
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<GaussianRational> v(cols);
  v[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    v[pivot_col[k]] = -rows[k][free_col];
  }
  return v;
}

double ChordalH(const HPoint& a, const HPoint& b) {
  double na = std::sqrt(std::norm(a.x) + std::norm(a.y));
  double nb = std::sqrt(std::norm(b.x) + std::norm(b.y));
  return std::abs(a.x * b.y - a.y * b.x) / (na * nb);
}

HFunc::HFunc(const RatFunc& f) : degree_(f.degree()) {
  num_ = f.num().to_complex();
  den_ = f.den().to_complex();
  num_.resize(static_cast<std::size_t>(degree_) + 1, Complex(0));
  den_.resize(static_cast<std::size_t>(degree_) + 1, Complex(0));
}

HPoint HFunc::operator()(const HPoint& p) const {
  // Scale so the larger coordinate has modulus one before expanding.
  double s = std::max(std::abs(p.x), std::abs(p.y));
  Complex x = p.x / s, y = p.y / s;
  Complex n = 0, d = 0, yk = 1;
  std::vector<Complex> ypow(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    ypow[k] = yk;
    yk *= y;
  }
  Complex xk = 1;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    Complex w = xk * ypow[num_.size() - 1 - k];
    n += num_[k] * w;
    d += den_[k] * w;
    xk *= x;
  }
  return {n, d};
}

HPoint Apply(const Mat2& m, const HPoint& p) {
  return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

Mat2 Mul(const Mat2& m, const Mat2& n) {
  return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
          m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}

Mat2 Inv(const Mat2& m) { return {m[3], -m[1], -m[2], m[0]}; }

Mat2 ToZeroOneInf(const HPoint& p0, const HPoint& p1, const HPoint& p2) {
  // L_k(z) = y_k z_x - x_k z_y vanishes at p_k.
  auto l = [](const HPoint& p, const HPoint& z) { return p.y * z.x - p.x * z.y; };
  Complex s0 = l(p2, p1), s1 = l(p0, p1);
  return {s0 * p0.y, -s0 * p0.x, s1 * p2.y, -s1 * p2.x};
}

std::optional<Mobius> RationalizeMobius(const Mat2& m, double tol) {
  double big = 0;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(m[k]) > big) {
      big = std::abs(m[k]);
      arg = k;
    }
  }
  if (big == 0) return std::nullopt;
  std::array<GaussianRational, 4> q;
  for (std::size_t k = 0; k < 4; ++k) {
    auto r = Rationalize(m[k] / m[arg], tol);
    if (!r) return std::nullopt;
    q[k] = *r;
  }
  if ((q[0] * q[3] - q[1] * q[2]).is_zero()) return std::nullopt;
  return Mobius(q[0], q[1], q[2], q[3]);
}

std::vector<HPoint> FiberH(const RatFunc& f, Complex w) {
  int d = f.degree();
  auto n = f.num().to_complex(), q = f.den().to_complex();
  std::size_t len = std::max(n.size(), q.size());
  n.resize(len, Complex(0));
  q.resize(len, Complex(0));
  std::vector<Complex> c(len);
  for (std::size_t k = 0; k < len; ++k) c[k] = n[k] - w * q[k];
  // Drop numerically vanishing top coefficients; each is a root at infinity.
  double scale = 0;
  for (Complex v : c) scale = std::max(scale, std::abs(v));
  while (c.size() > 1 && std::abs(c.back()) <= 1e-12 * scale) c.pop_back();
  std::vector<HPoint> out;
  for (Complex z : SimpleRoots(c)) out.push_back(HPoint::Finite(z));
  while (static_cast<int>(out.size()) < d) out.push_back(HPoint::Inf());
  return out;
}

const std::vector<GaussianRational>& ProbePoints() {
  // Low height first: normalizing at these keeps reconstructed
  // coefficients small enough to rationalize.
  static const std::vector<GaussianRational> pts = [] {
    std::vector<GaussianRational> v;
    const long nums[][4] = {{0, 1, 0, 1},  {1, 1, 0, 1},  {-1, 1, 0, 1}, {0, 1, 1, 1},
                            {0, 1, -1, 1}, {2, 1, 0, 1},  {-2, 1, 0, 1}, {1, 2, 0, 1},
                            {1, 1, 1, 1},  {1, 1, -1, 1}, {-1, 1, 1, 1}, {3, 1, 0, 1},
                            {2, 3, 0, 1},  {-3, 5, 1, 7}, {5, 4, 2, 9},  {1, 7, -3, 4}};
    for (const auto& n : nums) {
      v.emplace_back(mpq_class(n[0], n[1]), mpq_class(n[2], n[3]));
    }
    return v;
  }();
  return pts;
}

}  // namespace rittdyn::internal
