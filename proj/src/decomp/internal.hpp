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

// Helpers shared by the decomposition sources.

#ifndef RITTDYN_DECOMP_INTERNAL_HPP_
#define RITTDYN_DECOMP_INTERNAL_HPP_

#include <array>
#include <optional>
#include <vector>

#include "rittdyn/numerics.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn::internal {

// Exact kernel vector of a matrix over Q(i), if the kernel is nontrivial.
std::optional<std::vector<GaussianRational>> KernelVector(
    std::vector<std::vector<GaussianRational>> rows, std::size_t cols);

// Points of the sphere as (x : y).
struct HPoint {
  Complex x = 0, y = 1;
  static HPoint Finite(Complex z) { return {z, 1}; }
  static HPoint Inf() { return {1, 0}; }
};

double ChordalH(const HPoint& a, const HPoint& b);

// Numeric rational function in homogeneous form.
class HFunc {
 public:
  explicit HFunc(const RatFunc& f);
  HPoint operator()(const HPoint& p) const;
  int degree() const { return degree_; }

 private:
  int degree_;
  std::vector<Complex> num_, den_;
};

using Mat2 = std::array<Complex, 4>;  // (a b; c d), z -> (az + b)/(cz + d)

HPoint Apply(const Mat2& m, const HPoint& p);
Mat2 Mul(const Mat2& m, const Mat2& n);  // m o n
Mat2 Inv(const Mat2& m);
// Sends p0, p1, p2 to 0, 1, inf.
Mat2 ToZeroOneInf(const HPoint& p0, const HPoint& p1, const HPoint& p2);
// Rationalizes after scaling the largest entry to one; verifies nothing.
std::optional<Mobius> RationalizeMobius(const Mat2& m, double tol = 1e-8);

// Fiber of f over w, with infinity included, as homogeneous points.
std::vector<HPoint> FiberH(const RatFunc& f, Complex w);

// Candidate values in Q(i) used to probe a function at rational points.
const std::vector<GaussianRational>& ProbePoints();

}  // namespace rittdyn::internal

#endif  // RITTDYN_DECOMP_INTERNAL_HPP_
