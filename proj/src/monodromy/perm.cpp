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
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "rittdyn/monodromy.hpp"

namespace rittdyn {

Permutation IdentityPermutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation Multiply(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Permutation Inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool IsIdentity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> CycleType(const Permutation& p) {
  std::vector<int> t;
  for (const auto& c : Cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<std::vector<int>> Orbits(int n, const std::vector<Permutation>& gens) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> orbit{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        int y = g[orbit[k]];
        if (label[y] < 0) {
          label[y] = label[s];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::string CycleString(const Permutation& p) {
  std::ostringstream out;
  for (const auto& c : Cycles(p)) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k] + 1;
    out << ')';
  }
  return out.str();
}

namespace {

struct CapExceeded {};

// Incremental Schreier-Sims over the base 0, 1, ..., n-1. Level i keeps
// the strong generators fixing 0..i-1 and a full transversal for the
// orbit of i.
class StabilizerChain {
 public:
  StabilizerChain(int n, double log_cap)
      : n_(n), log_cap_(log_cap), gens_(n), reps_(n), orbit_(n) {
    for (int i = 0; i < n; ++i) {
      reps_[i].resize(static_cast<std::size_t>(n));
      reps_[i][i] = IdentityPermutation(n);
      orbit_[i] = {i};
    }
  }

  void Insert(const Permutation& g) {
    auto [h, level] = Sift(g, 0);
    if (level < n_) AddAtLevels(h, 0, level);
  }

  mpz_class Order() const {
    mpz_class r = 1;
    for (const auto& o : orbit_) r *= static_cast<unsigned long>(o.size());
    return r;
  }

 private:
  // Strips g through levels from..n-1; returns the residue and the level
  // at which it fell out (n when g is in the group).
  std::pair<Permutation, int> Sift(Permutation g, int from) const {
    for (int i = from; i < n_; ++i) {
      int j = g[i];
      if (!reps_[i][j]) return {std::move(g), i};
      if (j != i) g = Multiply(g, Inverse(*reps_[i][j]));
    }
    return {std::move(g), n_};
  }

  // h fixes 0..hi-1; it belongs to every level in (lo, hi] (and lo itself
  // for the initial insertion).
  void AddAtLevels(const Permutation& h, int lo, int hi) {
    for (int j = hi; j >= lo; --j) Extend(j, h);
  }

  void Extend(int i, const Permutation& g) {
    gens_[i].push_back(g);
    std::size_t old = orbit_[i].size();
    for (std::size_t a = 0; a < old; ++a) {
      Visit(i, Multiply(*reps_[i][orbit_[i][a]], g));
    }
  }

  void Visit(int i, const Permutation& t) {
    int y = t[i];
    if (!reps_[i][y]) {
      reps_[i][y] = t;
      orbit_[i].push_back(y);
      log_order_ += std::log(static_cast<double>(orbit_[i].size())) -
                    std::log(static_cast<double>(orbit_[i].size() - 1));
      if (log_order_ > log_cap_) throw CapExceeded{};
      for (std::size_t s = 0; s < gens_[i].size(); ++s) {
        Visit(i, Multiply(t, gens_[i][s]));
      }
      return;
    }
    auto [h, level] = Sift(Multiply(t, Inverse(*reps_[i][y])), i + 1);
    if (level < n_) AddAtLevels(h, i + 1, level);
  }

  int n_;
  double log_cap_;
  double log_order_ = 0;
  std::vector<std::vector<Permutation>> gens_;
  std::vector<std::vector<std::optional<Permutation>>> reps_;
  std::vector<std::vector<int>> orbit_;
};

}  // namespace

std::optional<mpz_class> GroupOrder(int n, const std::vector<Permutation>& gens,
                                    const mpz_class& cap) {
  if (n <= 1) return cap >= 1 ? std::optional<mpz_class>(1) : std::nullopt;
  // Intermediate orders only grow, so a running product above the cap is
  // decisive. The logarithmic test carries a little slack; the exact
  // comparison at the end settles it.
  double log_cap = std::log(cap.get_d()) + 1e-9;
  StabilizerChain chain(n, log_cap);
  try {
    for (const auto& g : gens) {
      if (!IsIdentity(g)) chain.Insert(g);
    }
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
  mpz_class order = chain.Order();
  if (order > cap) return std::nullopt;
  return order;
}

}  // namespace rittdyn
