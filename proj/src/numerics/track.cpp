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
#include <limits>
#include <numbers>
#include <sstream>

#include "rittdyn/error.hpp"
#include "rittdyn/numerics.hpp"

namespace rittdyn {

namespace {

struct Sheet {
  int chart = 0;  // 0: coordinate z, 1: coordinate u = 1/z
  Complex c;
};

double ChordalHom(Complex x1, Complex y1, Complex x2, Complex y2) {
  double n1 = std::sqrt(std::norm(x1) + std::norm(y1));
  double n2 = std::sqrt(std::norm(x2) + std::norm(y2));
  return std::abs(x1 * y2 - x2 * y1) / (n1 * n2);
}

double SheetDistance(const Sheet& a, const Sheet& b) {
  Complex xa = a.chart == 0 ? a.c : Complex(1), ya = a.chart == 0 ? Complex(1) : a.c;
  Complex xb = b.chart == 0 ? b.c : Complex(1), yb = b.chart == 0 ? Complex(1) : b.c;
  return ChordalHom(xa, ya, xb, yb);
}

void Horner(const std::vector<Complex>& c, Complex x, Complex& v, Complex& dv) {
  v = 0;
  dv = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dv = dv * x + v;
    v = v * x + c[k];
  }
}

std::vector<Complex> PadTo(std::vector<Complex> c, int d) {
  c.resize(static_cast<std::size_t>(d) + 1, Complex(0));
  return c;
}

std::string ArcMessage(const std::string& what, std::size_t arc, Complex wa,
                       Complex wb) {
  std::ostringstream msg;
  msg << what << " on arc " << arc << " from (" << wa.real() << ", "
      << wa.imag() << ") to (" << wb.real() << ", " << wb.imag() << ")";
  return msg.str();
}

}  // namespace

double Chordal(Complex a, Complex b) { return ChordalHom(a, 1.0, b, 1.0); }

LoopPath::LoopPath(std::vector<Complex> waypoints, double max_step)
    : waypoints_(std::move(waypoints)), max_step_(max_step) {
  if (waypoints_.size() < 3) ThrowPrecondition("LoopPath: too few waypoints");
  if (waypoints_.front() != waypoints_.back()) {
    ThrowPrecondition("LoopPath: first and last waypoint differ");
  }
  for (std::size_t k = 1; k < waypoints_.size(); ++k) {
    if (std::abs(waypoints_[k] - waypoints_[k - 1]) > max_step * (1 + 1e-9)) {
      ThrowPrecondition("LoopPath: waypoints farther apart than max step");
    }
  }
}

namespace {

void AppendSegment(std::vector<Complex>& pts, Complex to, double max_step) {
  Complex from = pts.back();
  int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(to - from) / max_step)));
  for (int k = 1; k <= pieces; ++k) {
    pts.push_back(from + (to - from) * (static_cast<double>(k) / pieces));
  }
}

void AppendCircle(std::vector<Complex>& pts, Complex center, double radius,
                  double start_angle, double max_step) {
  // Chord length 2 r sin(pi / n) must not exceed max_step.
  int n = 64;
  while (2 * radius * std::sin(std::numbers::pi / n) > max_step) n *= 2;
  for (int k = 1; k < n; ++k) {
    pts.push_back(center +
                  std::polar(radius, start_angle + 2 * std::numbers::pi * k / n));
  }
  pts.push_back(center + std::polar(radius, start_angle));
}

}  // namespace

LoopPath LoopPath::Keyhole(Complex anchor, Complex center, double radius,
                           double max_step) {
  Complex dir = anchor - center;
  if (std::abs(dir) <= radius) {
    ThrowPrecondition("Keyhole: anchor inside the circle");
  }
  double angle = std::arg(dir);
  Complex entry = center + std::polar(radius, angle);
  std::vector<Complex> pts{anchor};
  AppendSegment(pts, entry, max_step);
  AppendCircle(pts, center, radius, angle, max_step);
  AppendSegment(pts, anchor, max_step);
  pts.back() = anchor;
  return LoopPath(std::move(pts), max_step);
}

LoopPath LoopPath::OuterCircle(Complex anchor, double radius, double max_step) {
  Complex entry = anchor - Complex(radius, 0);
  std::vector<Complex> pts{anchor};
  AppendSegment(pts, entry, max_step);
  AppendCircle(pts, anchor, radius, std::numbers::pi, max_step);
  AppendSegment(pts, anchor, max_step);
  pts.back() = anchor;
  return LoopPath(std::move(pts), max_step);
}

LoopPath LoopPath::reversed() const {
  std::vector<Complex> pts(waypoints_.rbegin(), waypoints_.rend());
  return LoopPath(std::move(pts), max_step_);
}

NumericMap::NumericMap(const RatFunc& f) : degree_(f.degree()) {
  num_[0] = PadTo(f.num().to_complex(), degree_);
  den_[0] = PadTo(f.den().to_complex(), degree_);
  num_[1].assign(num_[0].rbegin(), num_[0].rend());
  den_[1].assign(den_[0].rbegin(), den_[0].rend());
}

Complex NumericMap::value(Complex z) const {
  Complex n, d, dn, dd;
  Horner(num_[0], z, n, dn);
  Horner(den_[0], z, d, dd);
  return n / d;
}

std::vector<Complex> FiberOf(const NumericMap& f, Complex w,
                             const RootOptions& opts) {
  std::vector<Complex> c(f.num(0).size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.num(0)[k] - w * f.den(0)[k];
  if (std::abs(c.back()) <= 1e-12 * std::abs(c.front()) + 1e-300) {
    ThrowPrecondition("FiberOf: fiber contains infinity");
  }
  return SimpleRoots(c, opts);
}

namespace {

void TrackSheets(const NumericMap& f, const std::vector<Complex>& wp,
                 std::vector<Sheet>& sheets, const TrackOptions& opts) {
  const int n = f.degree();
  const double collision = 10 * opts.newton_tol;
  auto residual = [&](const Sheet& s, Complex w, Complex& g, Complex& dg,
                      Complex& q) {
    Complex p, dp, dq;
    Horner(f.num(s.chart), s.c, p, dp);
    Horner(f.den(s.chart), s.c, q, dq);
    g = p - w * q;
    dg = dp - w * dq;
  };

  std::vector<Sheet> next(n);
  std::vector<double> sep(n);
  for (std::size_t arc = 0; arc + 1 < wp.size(); ++arc) {
    const Complex wa = wp[arc], wb = wp[arc + 1];
    double s = 0, h = opts.initial_step;
    int streak = 0;
    while (s < 1) {
      const double hs = std::min(h, 1 - s);
      const Complex w0 = wa + (wb - wa) * s;
      const Complex w1 = wa + (wb - wa) * (s + hs);
      double min_sep = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        sep[i] = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
          if (j != i) sep[i] = std::min(sep[i], SheetDistance(sheets[i], sheets[j]));
        }
        min_sep = std::min(min_sep, sep[i]);
      }
      if (n == 1) sep[0] = min_sep = 1.0;

      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        Complex g, dg, q;
        residual(sheets[i], w0, g, dg, q);
        if (dg == Complex(0)) {
          ok = false;
          break;
        }
        Sheet pred{sheets[i].chart, sheets[i].c + (w1 - w0) * q / dg};
        Sheet cur = pred;
        bool converged = false;
        for (int it = 0; it < 10; ++it) {
          residual(cur, w1, g, dg, q);
          if (dg == Complex(0)) break;
          Complex delta = g / dg;
          cur.c -= delta;
          if (!std::isfinite(cur.c.real()) || !std::isfinite(cur.c.imag())) break;
          if (std::abs(delta) <= opts.newton_tol * std::max(1.0, std::abs(cur.c))) {
            converged = true;
            break;
          }
        }
        if (!converged || SheetDistance(cur, pred) > 0.25 * sep[i] ||
            SheetDistance(cur, sheets[i]) > 0.5 * sep[i]) {
          ok = false;
          break;
        }
        next[i] = cur;
      }
      if (ok) {
        for (int i = 0; i < n && ok; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (SheetDistance(next[i], next[j]) <= collision) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) {
        h /= 2;
        streak = 0;
        if (h < opts.min_step) {
          if (min_sep <= 1e3 * collision) {
            ThrowNumeric(ArcMessage("fiber collision", arc, wa, wb));
          }
          ThrowNumeric(ArcMessage("step-size underflow", arc, wa, wb));
        }
        continue;
      }
      for (int i = 0; i < n; ++i) {
        Sheet& sh = next[i];
        if (std::abs(sh.c) > 1) {
          sh = Sheet{1 - sh.chart, 1.0 / sh.c};
        }
      }
      sheets.swap(next);
      s += hs;
      if (++streak >= 2) h = std::min(2 * h, opts.initial_step);
    }
  }

}

std::vector<Sheet> StartSheets(int n, std::span<const ComplexPoint> start_fiber,
                               double collision) {
  if (static_cast<int>(start_fiber.size()) != n) {
    ThrowPrecondition("TrackFiber: start fiber size differs from degree");
  }
  std::vector<Sheet> sheets(n);
  for (int i = 0; i < n; ++i) {
    Complex z = start_fiber[i].z;
    sheets[i] = std::abs(z) <= 1 ? Sheet{0, z} : Sheet{1, 1.0 / z};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (SheetDistance(sheets[i], sheets[j]) <= collision) {
        ThrowPrecondition("TrackFiber: start fiber points are not separated");
      }
    }
  }
  return sheets;
}

}  // namespace

std::vector<int> TrackFiber(const NumericMap& f, const LoopPath& loop,
                            std::span<const ComplexPoint> start_fiber,
                            const TrackOptions& opts) {
  const int n = f.degree();
  std::vector<Sheet> sheets = StartSheets(n, start_fiber, 10 * opts.newton_tol);
  const auto& wp = loop.waypoints();
  TrackSheets(f, wp, sheets, opts);

  std::vector<int> perm(n, -1);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    Sheet end = sheets[i];
    double best = std::numeric_limits<double>::infinity(), second = best;
    int arg = -1;
    for (int j = 0; j < n; ++j) {
      Complex z = start_fiber[j].z;
      Sheet ref = std::abs(z) <= 1 ? Sheet{0, z} : Sheet{1, 1.0 / z};
      double dist = SheetDistance(end, ref);
      if (dist < best) {
        second = best;
        best = dist;
        arg = j;
      } else if (dist < second) {
        second = dist;
      }
    }
    if (n > 1 && !(best < opts.match_ratio * second)) {
      ThrowNumeric(ArcMessage("ambiguous endpoint matching", wp.size() - 2,
                              wp[wp.size() - 2], wp.back()));
    }
    if (hit[arg]) {
      ThrowNumeric("ambiguous endpoint matching: two sheets end at one point");
    }
    hit[arg] = true;
    perm[i] = arg;
  }
  return perm;
}

std::vector<int> TrackFiber(const RatFunc& f, const LoopPath& loop,
                            std::span<const ComplexPoint> start_fiber,
                            const TrackOptions& opts) {
  return TrackFiber(NumericMap(f), loop, start_fiber, opts);
}

std::vector<Complex> TrackPath(const NumericMap& f, std::span<const Complex> path,
                               std::span<const ComplexPoint> start_fiber,
                               const TrackOptions& opts) {
  if (path.size() < 2) ThrowPrecondition("TrackPath: path needs two points");
  std::vector<Sheet> sheets = StartSheets(f.degree(), start_fiber, 10 * opts.newton_tol);
  TrackSheets(f, std::vector<Complex>(path.begin(), path.end()), sheets, opts);
  std::vector<Complex> out;
  for (const auto& sh : sheets) {
    out.push_back(sh.chart == 0 ? sh.c
                                : (sh.c == Complex(0) ? Complex(HUGE_VAL, 0) : 1.0 / sh.c));
  }
  return out;
}

}  // namespace rittdyn
