// Copyright 2026 The fdds Authors.
//
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
#include <set>

#include "fdds/tree_arena.hpp"

namespace fdds::unroll {

namespace {

// Level-by-level reconstruction of X.  Trees of X are settled from the
// deepest level of B downwards; at a level d only the trees of depth at
// least d matter, because T>=d is a semiring morphism.  Within a level the
// least unexplained tree of B determines the next tree of X up to a few
// candidates, one per monomial and per position of the new tree relative
// to the current minimum.  Candidates are checked and, when several
// survive, explored in turn.
class LevelSolver {
 public:
  LevelSolver(TreeArena& ar, std::vector<Forest> p, Forest b)
      : ar_(ar), p_(std::move(p)), b_(std::move(b)) {
    for (const auto& r : b_.runs) levels_.push_back(ar_.depth(r.id));
    std::sort(levels_.begin(), levels_.end(), std::greater<>());
    levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  }

  std::optional<Forest> run() { return search(Forest(), 0); }

 private:
  Forest image_at(const Forest& x, std::uint32_t d) {
    Forest xd = tall_trees(ar_, x, d);
    Forest acc, xp;
    for (std::size_t i = 1; i < p_.size(); ++i) {
      xp = i == 1 ? xd : forest_multiply(ar_, xp, xd);
      if (xp.empty()) break;
      Forest ai = tall_trees(ar_, p_[i], d);
      if (!ai.empty()) acc = forest_add(acc, forest_multiply(ar_, ai, xp));
    }
    return acc;
  }

  Forest image(const Forest& x) {
    Forest acc, xp;
    for (std::size_t i = 1; i < p_.size(); ++i) {
      xp = i == 1 ? x : forest_multiply(ar_, xp, x);
      if (xp.empty()) break;
      if (!p_[i].empty()) acc = forest_add(acc, forest_multiply(ar_, p_[i], xp));
    }
    return acc;
  }

  std::vector<NodeId> candidates(NodeId b, const Forest& x, std::uint32_t d) {
    std::set<NodeId> out;
    std::optional<NodeId> m;
    if (!x.empty()) m = ar_.cut(forest_min(ar_, x), d);
    auto keep = [&](std::optional<NodeId> z) {
      if (z && ar_.depth(*z) == d) out.insert(*z);
    };
    for (std::size_t i = 1; i < p_.size(); ++i) {
      Forest ai = tall_trees(ar_, p_[i], d);
      if (ai.empty()) continue;
      const NodeId a = forest_min(ar_, ai);
      if (i == 1) {
        keep(ar_.divide(b, a));
        continue;
      }
      if (m) keep(ar_.divide(b, ar_.product(a, ar_.power(*m, i - 1))));
      if (auto q = ar_.divide(b, a)) keep(ar_.root(*q, static_cast<unsigned>(i)));
    }
    return {out.begin(), out.end()};
  }

  std::optional<Forest> search(Forest x, std::size_t li) {
    while (true) {
      if (li == levels_.size()) {
        if (image(x) == b_) return x;
        return std::nullopt;
      }
      const std::uint32_t d = levels_[li];
      const Forest bd = tall_trees(ar_, b_, d);
      auto rem = forest_subtract(bd, image_at(x, d));
      if (!rem) return std::nullopt;
      if (rem->empty()) {
        ++li;
        continue;
      }
      const NodeId b = forest_min(ar_, *rem);
      std::vector<Forest> next;
      for (NodeId z : candidates(b, x, d)) {
        Forest grown = forest_add(x, Forest::single(z));
        if (forest_submultiset(image_at(grown, d), bd)) next.push_back(std::move(grown));
      }
      if (next.empty()) return std::nullopt;
      if (next.size() == 1) {
        x = std::move(next.front());
        continue;
      }
      for (auto& g : next) {
        if (auto r = search(std::move(g), li)) return r;
      }
      return std::nullopt;
    }
  }

  TreeArena& ar_;
  std::vector<Forest> p_;
  Forest b_;
  std::vector<std::uint32_t> levels_;
};

}  // namespace

std::optional<Forest> solve_forest_poly(TreeArena& ar,
                                        const std::vector<Forest>& p,
                                        const Forest& b) {
  Forest rhs = b;
  std::vector<Forest> q = p;
  if (!q.empty() && !q[0].empty()) {
    auto r = forest_subtract(b, q[0]);
    if (!r) return std::nullopt;
    rhs = std::move(*r);
    q[0] = Forest();
  }
  bool nonconstant = false;
  for (std::size_t i = 1; i < q.size(); ++i) nonconstant |= !q[i].empty();
  if (!nonconstant) return rhs.empty() ? std::optional<Forest>(Forest()) : std::nullopt;
  return LevelSolver(ar, std::move(q), std::move(rhs)).run();
}

}  // namespace fdds::unroll
