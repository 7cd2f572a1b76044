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
#ifndef RITTDYN_NUMERICS_HPP_
#define RITTDYN_NUMERICS_HPP_

#include <complex>
#include <span>
#include <vector>

#include "rittdyn/poly.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn {

using Complex = std::complex<double>;

struct ComplexPoint {
  Complex z;
  double error_radius = 0.0;
};

struct Root {
  ComplexPoint point;
  int multiplicity = 1;
};

struct RootOptions {
  // Residual acceptance, relative to sum_k |c_k| |z|^k.
  double tol = 1e-8;
  // Roots closer than this (relative to max(1, |z|)) are merged.
  double cluster_tol = 1e-8;
  int max_iterations = 500;
};

// Roots of an exact polynomial with multiplicity. Multiplicities come from an
// exact squarefree decomposition; numerically coincident roots of distinct
// factors are then merged. Throws ErrorKind::kNumeric on non-convergence.
std::vector<Root> AllRoots(const Poly& p, const RootOptions& opts = {});

// All roots of a floating-point polynomial (lowest degree first), clustered
// by proximity. Leading zeros are dropped.
std::vector<Root> NumericRoots(std::span<const Complex> coeffs,
                               const RootOptions& opts = {});

// Raw simultaneous iteration without clustering; deg p values.
std::vector<Complex> SimpleRoots(std::span<const Complex> coeffs,
                                 const RootOptions& opts = {});

// Closed polyline in the target sphere, starting and ending at the anchor.
class LoopPath {
 public:
  // Validates closure and the max-step spacing; throws kPrecondition.
  LoopPath(std::vector<Complex> waypoints, double max_step);

  // Spoke from anchor towards center, one counterclockwise turn on the
  // circle |w - center| = radius, and back along the same spoke.
  static LoopPath Keyhole(Complex anchor, Complex center, double radius,
                          double max_step);
  // Counterclockwise circle centred at the anchor, entered along the ray
  // pointing in the direction of arg = pi.
  static LoopPath OuterCircle(Complex anchor, double radius, double max_step);

  const std::vector<Complex>& waypoints() const { return waypoints_; }
  Complex anchor() const { return waypoints_.front(); }
  double max_step() const { return max_step_; }
  LoopPath reversed() const;

 private:
  std::vector<Complex> waypoints_;
  double max_step_;
};

struct TrackOptions {
  double newton_tol = 1e-11;
  double initial_step = 1.0 / 32;
  double min_step = 1.0 / (1 << 20);
  double match_ratio = 0.1;
};

// f = num/den prepared for evaluation in both charts of the sphere.
class NumericMap {
 public:
  explicit NumericMap(const RatFunc& f);
  int degree() const { return degree_; }
  // Coefficients of num - w*den in chart 0 (z) or chart 1 (u = 1/z).
  const std::vector<Complex>& num(int chart) const { return num_[chart]; }
  const std::vector<Complex>& den(int chart) const { return den_[chart]; }
  Complex value(Complex z) const;

 private:
  int degree_;
  std::vector<Complex> num_[2];
  std::vector<Complex> den_[2];
};

// Preimages of w under f (w must not be f(inf)); finite, deg f of them.
std::vector<Complex> FiberOf(const NumericMap& f, Complex w,
                             const RootOptions& opts = {});

// Continues every fiber point along the loop and returns perm with
// perm[i] = index of the start point where sheet i ends. Throws
// ErrorKind::kNumeric naming the failing arc on step underflow, fiber
// collision or ambiguous endpoint matching.
std::vector<int> TrackFiber(const NumericMap& f, const LoopPath& loop,
                            std::span<const ComplexPoint> start_fiber,
                            const TrackOptions& opts = {});
std::vector<int> TrackFiber(const RatFunc& f, const LoopPath& loop,
                            std::span<const ComplexPoint> start_fiber,
                            const TrackOptions& opts = {});

// Distance on the Riemann sphere between finite points.
// Carries the start fiber along an open polyline; the result keeps the
// order of start_fiber. Points at infinity come back as HUGE_VAL.
std::vector<Complex> TrackPath(const NumericMap& f, std::span<const Complex> path,
                               std::span<const ComplexPoint> start_fiber,
                               const TrackOptions& opts = {});

double Chordal(Complex a, Complex b);

}  // namespace rittdyn

#endif  // RITTDYN_NUMERICS_HPP_
