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
#include <numeric>
#include <set>

#include "rittdyn/decomp.hpp"

namespace rittdyn {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Finest invariant partition in which all the given pairs are merged,
// encoded as the label of each point's class minimum.
std::vector<int> Closure(int n, const std::vector<Permutation>& gens,
                         const std::vector<std::pair<int, int>>& seeds) {
  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue;
  for (auto [a, b] : seeds) {
    if (uf.Union(a, b)) queue.push_back({a, b});
  }
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      if (uf.Union(g[a], g[b])) queue.push_back({g[a], g[b]});
    }
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[i] = uf.Find(i);
  return label;
}

BlockSystem FromLabels(const std::vector<int>& label) {
  std::vector<std::vector<int>> groups(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) groups[label[i]].push_back(static_cast<int>(i));
  BlockSystem b;
  for (auto& g : groups) {
    if (!g.empty()) b.blocks.push_back(std::move(g));
  }
  b.block_count = static_cast<int>(b.blocks.size());
  b.block_size = static_cast<int>(label.size()) / b.block_count;
  return b;
}

}  // namespace

std::vector<BlockSystem> BlockSystems(int n, const std::vector<Permutation>& gens) {
  // Minimal systems from each pair {0, j}; every other system is a join of
  // these, so close under joins.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> list;
  for (int j = 1; j < n; ++j) {
    auto lab = Closure(n, gens, {{0, j}});
    if (found.insert(lab).second) list.push_back(lab);
  }
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<std::pair<int, int>> seeds;
      for (int i = 0; i < n; ++i) {
        seeds.push_back({i, list[a][i]});
        seeds.push_back({i, list[b][i]});
      }
      auto lab = Closure(n, gens, seeds);
      if (found.insert(lab).second) list.push_back(lab);
    }
  }
  std::vector<BlockSystem> out;
  for (const auto& lab : list) {
    BlockSystem b = FromLabels(lab);
    if (b.block_size > 1 && b.block_count > 1) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& x, const BlockSystem& y) {
    if (x.block_size != y.block_size) return x.block_size < y.block_size;
    return x.blocks < y.blocks;
  });
  return out;
}

}  // namespace rittdyn
