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
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "rittdyn/error.hpp"
#include "rittdyn/monodromy.hpp"

namespace rittdyn {

namespace {

double SegmentDistance(Complex q, Complex a, Complex b) {
  Complex ab = b - a;
  double t = std::real((q - a) * std::conj(ab)) / std::norm(ab);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(q - (a + t * ab));
}

// Smallest of: distance from b to every point, distance from each spoke
// b -> p to every other point, distance from b to the avoided values.
double Clearance(Complex b, const std::vector<Complex>& pts,
                 const std::vector<Complex>& avoid) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex a : avoid) best = std::min(best, std::abs(b - a));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    best = std::min(best, std::abs(b - pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j) best = std::min(best, SegmentDistance(pts[j], b, pts[i]));
    }
  }
  return best;
}

std::vector<Complex> RankedBases(const std::vector<Complex>& pts,
                                 const std::vector<Complex>& avoid,
                                 std::uint64_t seed, int count) {
  double scale = 1;
  Complex center = 0;
  for (Complex p : pts) {
    scale = std::max(scale, std::abs(p));
    center += p;
  }
  if (!pts.empty()) center /= static_cast<double>(pts.size());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::pair<double, Complex>> scored;
  for (int k = 0; k < count; ++k) {
    Complex b = center + scale * Complex(u(rng), u(rng));
    scored.push_back({Clearance(b, pts, avoid), b});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Complex> out;
  for (const auto& s : scored) out.push_back(s.second);
  return out;
}

void AddUnique(std::vector<SpherePoint>& pts, const SpherePoint& p, double tol) {
  for (const auto& q : pts) {
    if (q.SameAs(p, tol)) return;
  }
  pts.push_back(p);
}

std::vector<SpherePoint> SortAround(std::vector<SpherePoint> pts, Complex b) {
  std::stable_sort(pts.begin(), pts.end(), [b](const SpherePoint& x, const SpherePoint& y) {
    if (x.infinite != y.infinite) return y.infinite;
    if (x.infinite) return false;
    double ax = std::arg(x.approx - b), ay = std::arg(y.approx - b);
    if (ax != ay) return ax < ay;
    return std::abs(x.approx - b) < std::abs(y.approx - b);
  });
  return pts;
}

struct Job {
  RatFunc f;
  RamificationPortrait portrait;
};

MonodromyData TrackAll(const Job& job, Complex base, const std::vector<SpherePoint>& pts,
                       const std::vector<LoopPath>& loops, const LoopPath& outer,
                       const MonodromyOptions& opts) {
  MonodromyData m;
  m.degree = job.f.degree();
  m.base_point = {base, 0.0};
  m.branch_points = pts;
  NumericMap map(job.f);
  m.fiber_labels = FiberOf(map, base);
  std::sort(m.fiber_labels.begin(), m.fiber_labels.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  std::vector<ComplexPoint> start;
  for (Complex z : m.fiber_labels) start.push_back({z, 0.0});

  auto track = [&](std::size_t k) -> Permutation {
    const LoopPath& loop = k < loops.size() ? loops[k] : outer;
    try {
      return TrackFiber(map, loop, start, opts.track);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "loop " << k;
      if (k < pts.size()) msg << " around " << pts[k].ToString();
      else msg << " (outer circle)";
      msg << ": " << e.what();
      throw Error(e.kind(), msg.str());
    }
  };
  std::vector<Permutation> perms(loops.size() + 1);
  if (opts.parallel && loops.size() > 1) {
    std::vector<std::future<Permutation>> futures;
    for (std::size_t k = 0; k <= loops.size(); ++k) {
      futures.push_back(std::async(std::launch::async, track, k));
    }
    for (std::size_t k = 0; k <= loops.size(); ++k) perms[k] = futures[k].get();
  } else {
    for (std::size_t k = 0; k <= loops.size(); ++k) perms[k] = track(k);
  }
  Permutation around_all = perms.back();
  perms.pop_back();
  m.permutations = std::move(perms);
  if (!pts.empty() && pts.back().infinite) {
    // The circle enclosing every finite point is the inverse of the loop
    // about infinity.
    m.permutations.push_back(Inverse(around_all));
  } else {
    Permutation prod = IdentityPermutation(m.degree);
    for (const auto& p : m.permutations) prod = Multiply(prod, p);
    if (prod != around_all) {
      ThrowInternal("monodromy: product of finite loops differs from the outer loop");
    }
  }
  for (const auto& check : {m.CheckProductOne(), m.CheckTransitive(),
                            m.CheckCycleTypes(job.portrait, opts.match_tol)}) {
    if (!check.empty()) ThrowInternal("monodromy: " + check);
  }
  return m;
}

std::vector<MonodromyData> Build(const std::vector<Job>& jobs,
                                 const std::vector<SpherePoint>& points,
                                 const std::vector<Complex>& avoid,
                                 std::uint64_t seed, const MonodromyOptions& opts) {
  std::vector<Complex> finite;
  double scale = 1;
  for (const auto& p : points) {
    if (p.infinite) continue;
    finite.push_back(p.approx);
    scale = std::max(scale, std::abs(p.approx));
  }
  auto bases = RankedBases(finite, avoid, seed, opts.base_candidates);
  std::optional<Error> last;
  int tries = std::max(1, std::min(opts.base_retries, static_cast<int>(bases.size())));
  for (int t = 0; t < tries; ++t) {
    Complex b = bases[t];
    double clear = Clearance(b, finite, avoid);
    double radius = 0.4 * clear;
    double step = scale / 8;
    auto pts = SortAround(points, b);
    std::vector<LoopPath> loops;
    for (const auto& p : pts) {
      if (!p.infinite) loops.push_back(LoopPath::Keyhole(b, p.approx, radius, step));
    }
    double reach = 0;
    for (Complex p : finite) reach = std::max(reach, std::abs(p - b));
    LoopPath outer = LoopPath::OuterCircle(b, 1.5 * reach + 1.0, step);
    try {
      std::vector<MonodromyData> out;
      for (const auto& job : jobs) out.push_back(TrackAll(job, b, pts, loops, outer, opts));
      return out;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kPrecondition) throw;
      last = e;
    }
  }
  throw *last;
}

Job MakeJob(const RatFunc& f, const MonodromyOptions& opts) {
  if (f.degree() < 1) ThrowPrecondition("monodromy: constant function");
  return {f, ComputePortrait(f, opts.portrait)};
}

void AddAvoid(const RatFunc& f, std::vector<Complex>& avoid) {
  ExactPoint at_inf = f.eval(ExactPoint{true, {}});
  if (!at_inf.infinite) avoid.push_back(at_inf.value.to_complex());
}

}  // namespace

std::string MonodromyData::CheckProductOne() const {
  Permutation prod = IdentityPermutation(degree);
  for (const auto& p : permutations) prod = Multiply(prod, p);
  if (!IsIdentity(prod)) return "product-one check failed: product is " + CycleString(prod);
  return "";
}

std::string MonodromyData::CheckTransitive() const {
  if (Orbits(degree, permutations).size() != 1) {
    return "transitivity check failed";
  }
  return "";
}

std::string MonodromyData::CheckCycleTypes(const RamificationPortrait& portrait,
                                           double tol) const {
  std::vector<bool> used(portrait.branch_points.size(), false);
  for (std::size_t k = 0; k < branch_points.size(); ++k) {
    int idx = portrait.Find(branch_points[k], tol);
    std::vector<int> want(static_cast<std::size_t>(degree), 1);
    if (idx >= 0) {
      want = portrait.branch_points[idx].partition;
      used[idx] = true;
    }
    if (CycleType(permutations[k]) != want) {
      return "cycle-type check failed at " + branch_points[k].ToString() + ": got " +
             CycleString(permutations[k]);
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) {
      return "cycle-type check failed: branch point " +
             portrait.branch_points[i].value.ToString() + " has no loop";
    }
  }
  return "";
}

MonodromyData Monodromy(const RatFunc& f,
                        const std::optional<std::vector<SpherePoint>>& branch_set,
                        std::uint64_t seed, const MonodromyOptions& opts) {
  Job job = MakeJob(f, opts);
  std::vector<SpherePoint> points;
  if (branch_set) {
    for (const auto& p : *branch_set) AddUnique(points, p, opts.match_tol);
    for (const auto& b : job.portrait.branch_points) {
      bool found = false;
      for (const auto& p : points) found = found || p.SameAs(b.value, opts.match_tol);
      if (!found) {
        ThrowPrecondition("monodromy: branch set misses branch point " + b.value.ToString());
      }
    }
  } else {
    for (const auto& b : job.portrait.branch_points) points.push_back(b.value);
  }
  std::vector<Complex> avoid;
  AddAvoid(f, avoid);
  return Build({job}, points, avoid, seed, opts).front();
}

std::vector<MonodromyData> SharedMonodromy(const std::vector<RatFunc>& fs,
                                           std::uint64_t seed,
                                           const MonodromyOptions& opts) {
  std::vector<Job> jobs;
  std::vector<SpherePoint> points;
  std::vector<Complex> avoid;
  for (const auto& f : fs) {
    jobs.push_back(MakeJob(f, opts));
    for (const auto& b : jobs.back().portrait.branch_points) {
      AddUnique(points, b.value, opts.match_tol);
    }
    AddAvoid(f, avoid);
  }
  return Build(jobs, points, avoid, seed, opts);
}

}  // namespace rittdyn
