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
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rittdyn/error.hpp"
#include "rittdyn/numerics.hpp"

namespace rittdyn {

namespace {

// Horner evaluation of p and p'.
void EvalWithDerivative(std::span<const Complex> c, Complex z, Complex& p,
                        Complex& dp) {
  p = 0;
  dp = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

// Newton ratio p/p', computed through the reversed polynomial when |z| > 1.
Complex NewtonRatio(std::span<const Complex> c, Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0) {
    Complex p, dp;
    EvalWithDerivative(c, z, p, dp);
    if (dp == Complex(0)) return p == Complex(0) ? Complex(0) : Complex(1e-3);
    return p / dp;
  }
  // p(z) = z^n q(u), u = 1/z, q reversed.
  Complex u = 1.0 / z;
  Complex q = 0, dq = 0;
  for (int k = 0; k <= n; ++k) {
    dq = dq * u + q;
    q = q * u + c[k];
  }
  Complex denom = static_cast<double>(n) * q - u * dq;
  if (denom == Complex(0)) return q == Complex(0) ? Complex(0) : Complex(1e-3);
  return z * q / denom;
}

double Scale(std::span<const Complex> c, Complex z) {
  double s = 0, az = std::abs(z), pw = 1;
  for (const Complex& x : c) {
    s += std::abs(x) * pw;
    pw *= az;
  }
  return s;
}

std::vector<Complex> CompanionRoots(std::span<const Complex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) return {};
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

// Aberth-Ehrlich iteration. Returns false when it did not settle.
bool Aberth(std::span<const Complex> c, int max_iter, std::vector<Complex>& z) {
  const int n = static_cast<int>(c.size()) - 1;
  // Initial radius from the Fujiwara bound, halved for a tighter start.
  double radius = 0;
  for (int k = 0; k < n; ++k) {
    double r = std::pow(std::abs(c[k] / c[n]), 1.0 / (n - k));
    if (k == 0) r *= std::pow(0.5, 1.0 / n);
    radius = std::max(radius, r);
  }
  radius = std::max(radius, 1e-6);
  z.resize(n);
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2 * std::numbers::pi * k / n + 0.4);
  }
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iter; ++iter) {
    int active = 0;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex ratio = NewtonRatio(c, z[i]);
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[i] -= w;
      if (std::abs(w) <= 4 * std::numeric_limits<double>::epsilon() *
                             std::max(1.0, std::abs(z[i]))) {
        done[i] = true;
      } else {
        ++active;
      }
    }
    if (active == 0) return true;
  }
  return false;
}

void Polish(std::span<const Complex> c, std::vector<Complex>& z) {
  for (Complex& x : z) {
    for (int k = 0; k < 3; ++k) {
      Complex step = NewtonRatio(c, x);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 1e-6 * std::max(1.0, std::abs(x))) break;
      x -= step;
    }
  }
}

std::vector<Root> Cluster(const std::vector<Root>& roots, double cluster_tol) {
  std::vector<Root> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Complex sum = roots[i].point.z * static_cast<double>(roots[i].multiplicity);
    int mult = roots[i].multiplicity;
    std::vector<std::size_t> members{i};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        for (std::size_t m : members) {
          double scale = std::max(1.0, std::abs(roots[m].point.z));
          if (std::abs(roots[j].point.z - roots[m].point.z) <=
              cluster_tol * scale) {
            used[j] = true;
            members.push_back(j);
            sum += roots[j].point.z * static_cast<double>(roots[j].multiplicity);
            mult += roots[j].multiplicity;
            grew = true;
            break;
          }
        }
      }
    }
    Complex center = sum / static_cast<double>(mult);
    double radius = 0;
    for (std::size_t m : members) {
      radius = std::max(radius, std::abs(roots[m].point.z - center) +
                                    roots[m].point.error_radius);
    }
    out.push_back({{center, radius}, mult});
  }
  return out;
}

}  // namespace

std::vector<Complex> SimpleRoots(std::span<const Complex> coeffs,
                                 const RootOptions& opts) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() <= 1) return {};
  std::size_t zeros = 0;
  while (c[zeros] == Complex(0)) ++zeros;
  std::vector<Complex> roots(zeros, Complex(0));
  std::span<const Complex> rest(c.data() + zeros, c.size() - zeros);
  if (rest.size() == 2) {
    roots.push_back(-rest[0] / rest[1]);
    return roots;
  }
  if (rest.size() > 2) {
    std::vector<Complex> z;
    if (!Aberth(rest, opts.max_iterations, z)) {
      z = CompanionRoots(rest);
      if (z.size() + 1 != rest.size()) {
        ThrowNumeric("root finder did not converge (degree " +
                     std::to_string(rest.size() - 1) + ")");
      }
    }
    Polish(rest, z);
    roots.insert(roots.end(), z.begin(), z.end());
  }
  return roots;
}

std::vector<Root> NumericRoots(std::span<const Complex> coeffs,
                               const RootOptions& opts) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  std::vector<Complex> z = SimpleRoots(c, opts);
  std::vector<Root> roots;
  const int n = static_cast<int>(c.size()) - 1;
  for (const Complex& x : z) {
    Complex ratio = NewtonRatio(c, x);
    roots.push_back({{x, n * std::abs(ratio)}, 1});
  }
  return Cluster(roots, opts.cluster_tol);
}

std::vector<Root> AllRoots(const Poly& p, const RootOptions& opts) {
  if (p.is_zero() || p.degree() < 1) {
    ThrowPrecondition("AllRoots: polynomial must have degree >= 1");
  }
  std::vector<Poly> factors = SquarefreeDecomposition(p);
  std::vector<Root> roots;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    std::vector<Complex> c = factors[k].to_complex();
    std::vector<Complex> z = SimpleRoots(c, opts);
    for (const Complex& x : z) {
      Complex ratio = NewtonRatio(c, x);
      Complex pv = factors[k].eval(x);
      double resid = std::abs(pv) / Scale(c, x);
      if (resid > opts.tol) {
        std::ostringstream msg;
        msg << "root finder residual " << resid << " above tolerance "
            << opts.tol;
        ThrowNumeric(msg.str());
      }
      double err = factors[k].degree() * std::abs(ratio);
      roots.push_back({{x, err}, static_cast<int>(k + 1)});
    }
  }
  return Cluster(roots, opts.cluster_tol);
}

}  // namespace rittdyn
