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
#include <map>
#include <stdexcept>

#include "fdds/core.hpp"

namespace fdds {

namespace {

// Start index of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<std::uint32_t>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    auto a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace

Component Component::cycle(std::uint64_t len) {
  if (len == 0) throw std::invalid_argument("cycle length must be positive");
  Component c;
  c.trees_.assign(len, TransientTree());
  return c;
}

Component Component::from_trees(std::vector<TransientTree> trees) {
  if (trees.empty()) throw std::invalid_argument("empty cycle");
  std::vector<const TransientTree*> uniq;
  uniq.reserve(trees.size());
  for (const auto& t : trees) uniq.push_back(&t);
  std::sort(uniq.begin(), uniq.end(),
            [](auto* a, auto* b) { return *a < *b; });
  uniq.erase(std::unique(uniq.begin(), uniq.end(),
                         [](auto* a, auto* b) { return *a == *b; }),
             uniq.end());
  std::vector<std::uint32_t> rank(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto it = std::lower_bound(uniq.begin(), uniq.end(), &trees[i],
                               [](auto* a, auto* b) { return *a < *b; });
    rank[i] = static_cast<std::uint32_t>(it - uniq.begin());
  }
  std::size_t r = least_rotation(rank);
  Component c;
  c.trees_.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    c.trees_.push_back(std::move(trees[(r + i) % trees.size()]));
  }
  return c;
}

bool Component::is_cycle() const {
  return std::all_of(trees_.begin(), trees_.end(),
                     [](const TransientTree& t) { return t.is_leaf(); });
}

Count Component::size() const {
  Count s = 0;
  for (const auto& t : trees_) s += t.size();
  return s;
}

std::uint32_t Component::depth() const {
  std::uint32_t d = 0;
  for (const auto& t : trees_) d = std::max(d, t.depth());
  return d;
}

std::strong_ordering operator<=>(const Component& a, const Component& b) {
  if (auto c = a.cycle_len() <=> b.cycle_len(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end());
}

std::size_t ComponentHash::operator()(const Component& c) const noexcept {
  std::size_t h = c.cycle_len();
  for (const auto& t : c.trees()) {
    h = h * 1000003u ^ std::hash<std::string>{}(t.code());
  }
  return h;
}

Fdds canonicalize(std::span<const std::uint32_t> succ) {
  const std::size_t n = succ.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (succ[i] >= n) {
      throw std::invalid_argument("successor of state " + std::to_string(i) +
                                  " is out of range");
    }
  }
  // 0 = unseen, 1 = on the current walk, 2 = finished
  std::vector<std::uint8_t> color(n, 0);
  std::vector<bool> on_cycle(n, false);
  std::vector<std::uint32_t> walk;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    walk.clear();
    std::uint32_t v = static_cast<std::uint32_t>(s);
    while (color[v] == 0) {
      color[v] = 1;
      walk.push_back(v);
      v = succ[v];
    }
    if (color[v] == 1) {
      std::uint32_t u = v;
      do {
        on_cycle[u] = true;
        u = succ[u];
      } while (u != v);
    }
    for (auto w : walk) color[w] = 2;
  }

  std::vector<std::vector<std::uint32_t>> preds(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!on_cycle[u]) preds[succ[u]].push_back(static_cast<std::uint32_t>(u));
  }
  // Nodes by increasing distance from their cycle; codes are built in
  // the reverse order so that every child is ready before its parent.
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (on_cycle[u]) order.push_back(static_cast<std::uint32_t>(u));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto p : preds[order[i]]) order.push_back(p);
  }
  std::vector<TransientTree> tree(n);
  for (std::size_t i = order.size(); i-- > 0;) {
    auto v = order[i];
    std::vector<TransientTree> kids;
    kids.reserve(preds[v].size());
    for (auto p : preds[v]) kids.push_back(std::move(tree[p]));
    tree[v] = TransientTree::from_children(std::move(kids));
  }

  std::map<Component, Count> found;
  std::vector<bool> used(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (!on_cycle[s] || used[s]) continue;
    std::vector<TransientTree> seq;
    std::uint32_t v = static_cast<std::uint32_t>(s);
    do {
      used[v] = true;
      seq.push_back(std::move(tree[v]));
      v = succ[v];
    } while (v != s);
    ++found[Component::from_trees(std::move(seq))];
  }
  std::vector<Fdds::Entry> entries(found.begin(), found.end());
  return Fdds::from_entries(std::move(entries));
}

std::vector<std::uint32_t> to_table(const Component& c) {
  const auto len = c.cycle_len();
  std::vector<std::uint32_t> succ(len);
  for (std::uint64_t j = 0; j < len; ++j) {
    succ[j] = static_cast<std::uint32_t>((j + 1) % len);
  }
  std::vector<std::uint32_t> stack;
  for (std::uint64_t j = 0; j < len; ++j) {
    const std::string& code = c.trees()[j].code();
    stack.assign(1, static_cast<std::uint32_t>(j));
    for (std::size_t i = 1; i + 1 < code.size(); ++i) {
      if (code[i] == '(') {
        auto id = static_cast<std::uint32_t>(succ.size());
        succ.push_back(stack.back());
        stack.push_back(id);
      } else {
        stack.pop_back();
      }
    }
  }
  return succ;
}

std::vector<std::uint32_t> to_table(const Fdds& a) {
  std::vector<std::uint32_t> succ;
  for (const auto& [c, m] : a.entries()) {
    auto part = to_table(c);
    for (Count r = 0; r < m; ++r) {
      auto base = static_cast<std::uint32_t>(succ.size());
      for (auto s : part) succ.push_back(base + s);
    }
  }
  return succ;
}

}  // namespace fdds
