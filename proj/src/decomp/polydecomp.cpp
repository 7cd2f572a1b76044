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

#include <numeric>

#include "decomp/internal.hpp"
#include "rittdyn/decomp.hpp"
#include "rittdyn/error.hpp"

namespace rittdyn {

namespace {

// First `terms` coefficients of g^(1/s) for a power series with g[0] = 1.
std::vector<GaussianRational> SeriesRoot(const std::vector<GaussianRational>& g, int s,
                                         int terms) {
  // k h_k = sum_{j=1..k} ((a + 1) j - k) g_j h_{k-j}, a = 1/s.
  mpq_class a(1, s);
  std::vector<GaussianRational> h(static_cast<std::size_t>(terms));
  h[0] = 1;
  for (int k = 1; k < terms; ++k) {
    GaussianRational acc;
    for (int j = 1; j <= k && j < static_cast<int>(g.size()); ++j) {
      if (g[j].is_zero()) continue;
      mpq_class w = (a + 1) * j - k;
      acc += g[j] * h[k - j] * GaussianRational(w);
    }
    h[k] = acc * GaussianRational(mpq_class(1, k));
  }
  return h;
}

// Reversed and scaled: g_j = f_{n-j} / f_n.
std::vector<GaussianRational> ReversedMonic(const Poly& f) {
  int n = f.degree();
  GaussianRational inv = f.lead().inverse();
  std::vector<GaussianRational> g(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) g[j] = f.coeff(n - j) * inv;
  return g;
}

// Coefficients c_k with F = sum c_k W^k, when they are all constants.
std::optional<Poly> WAdic(Poly F, const Poly& W) {
  std::vector<GaussianRational> c;
  while (!F.is_zero()) {
    auto [q, r] = DivMod(F, W);
    if (!r.is_constant()) return std::nullopt;
    c.push_back(r.coeff(0));
    F = std::move(q);
  }
  return Poly(std::move(c));
}

std::optional<RatFunc> DivideRightLinear(const RatFunc& F, const RatFunc& W) {
  const int g = F.degree() / W.degree();
  std::vector<Poly> basis;
  Poly wn_pow = Poly({1});
  std::vector<Poly> wd_pows{Poly({1})};
  for (int k = 1; k <= g; ++k) wd_pows.push_back(wd_pows.back() * W.den());
  for (int k = 0; k <= g; ++k) {
    basis.push_back(wn_pow * wd_pows[g - k]);
    wn_pow = wn_pow * W.num();
  }
  std::vector<Poly> cols;
  for (int k = 0; k <= g; ++k) cols.push_back(basis[k] * F.den());
  for (int k = 0; k <= g; ++k) cols.push_back(-(basis[k] * F.num()));
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  std::vector<std::vector<GaussianRational>> m(static_cast<std::size_t>(rows),
                                               std::vector<GaussianRational>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i <= cols[j].degree(); ++i) m[i][j] = cols[j].coeff(i);
  }
  auto v = internal::KernelVector(std::move(m), cols.size());
  if (!v) return std::nullopt;
  Poly P(std::vector<GaussianRational>(v->begin(), v->begin() + g + 1));
  Poly Q(std::vector<GaussianRational>(v->begin() + g + 1, v->end()));
  if (Q.is_zero() || (P.is_zero() && g > 0)) return std::nullopt;
  RatFunc G(P, Q);
  if (G.degree() != g || !EqualExact(Compose(G, W), F)) return std::nullopt;
  return G;
}

std::vector<int> Divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) d.push_back(k);
  }
  return d;
}

}  // namespace

std::optional<Poly> PolyRightFactor(const Poly& f, int r) {
  const int n = f.degree();
  if (r < 1 || n < 1 || n % r != 0) return std::nullopt;
  if (r == 1) return Poly::X();
  if (r == n) return (f - Poly::Constant(f.coeff(0))) * f.lead().inverse();
  auto h = SeriesRoot(ReversedMonic(f), n / r, r);
  std::vector<GaussianRational> v(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j < r; ++j) v[r - j] = h[j];
  Poly V(std::move(v));
  if (!WAdic(f, V)) return std::nullopt;
  return V;
}

std::vector<DecompClass> PolyDecompose(const Poly& f, bool include_trivial) {
  const int n = f.degree();
  if (n < 2) ThrowPrecondition("poly_decompose: degree must be at least 2");
  std::vector<DecompClass> out;
  for (int r : Divisors(n)) {
    if (!include_trivial && (r == 1 || r == n)) continue;
    auto V = PolyRightFactor(f, r);
    if (!V) continue;
    auto U = WAdic(f, *V);
    DecompClass c;
    c.U = RatFunc(*U);
    c.V = RatFunc(*V);
    c.normalization = "V monic, V(0) = 0";
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<RatFunc> DivideRight(const RatFunc& F, const RatFunc& W) {
  if (W.degree() < 1 || F.degree() % W.degree() != 0) return std::nullopt;
  if (F.is_polynomial() && W.is_polynomial()) {
    auto G = WAdic(F.num() * F.den().lead().inverse(), W.num() * W.den().lead().inverse());
    if (!G) return std::nullopt;
    return RatFunc(*G);
  }
  return DivideRightLinear(F, W);
}

namespace internal {

std::optional<RatFunc> DivideLeftPoly(const Poly& A, const Poly& D) {
  const int a = A.degree(), d = D.degree();
  if (d < 1 || a % d != 0) return std::nullopt;
  if (d == 1) {
    return RatFunc((A - Poly::Constant(D.coeff(0))) * D.coeff(1).inverse());
  }
  const int k = a / d;
  GaussianRational beta = D.coeff(d - 1) * (D.lead() * GaussianRational(d)).inverse();
  auto h = SeriesRoot(ReversedMonic(A), d, k + 1);
  for (const auto& r0 : ExactRoots(A.lead() * D.lead().inverse(), d)) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) c[k - j] = r0 * h[j];
    Poly R = Poly(std::move(c)) - Poly::Constant(beta);
    if (D.compose(R) == A) return RatFunc(R);
  }
  return std::nullopt;
}

}  // namespace internal

EngstromResult EngstromSplit(const Poly& A, const Poly& C, const Poly& D, const Poly& B) {
  Poly F = A.compose(C);
  if (F != D.compose(B) || A.degree() < 1 || C.degree() < 1 || D.degree() < 1 ||
      B.degree() < 1) {
    ThrowPrecondition("engstrom_split: A o C differs from D o B");
  }
  const int n = F.degree();
  const int u = std::gcd(A.degree(), D.degree());
  const int v = std::gcd(C.degree(), B.degree());
  auto W = PolyRightFactor(F, n / u);
  auto V = PolyRightFactor(F, v);
  if (!W || !V) ThrowInternal("engstrom_split: expected right factor not found");
  auto U = WAdic(F, *W);
  auto A1 = WAdic(*W, C), D1 = WAdic(*W, B);
  auto C1 = WAdic(C, *V), B1 = WAdic(B, *V);
  if (!U || !A1 || !D1 || !C1 || !B1) ThrowInternal("engstrom_split: division failed");
  EngstromResult r{*U, *V, *A1, *C1, *D1, *B1};
  if (r.U.compose(r.A1) != A || r.U.compose(r.D1) != D || r.C1.compose(r.V) != C ||
      r.B1.compose(r.V) != B || r.A1.compose(r.C1) != r.D1.compose(r.B1)) {
    ThrowInternal("engstrom_split: output identities do not hold");
  }
  return r;
}

}  // namespace rittdyn
