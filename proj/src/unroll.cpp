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

#include "fdds/unroll.hpp"

#include <stdexcept>

namespace fdds::unroll {

namespace {

std::uint64_t pattern_period(const std::vector<TransientTree>& t) {
  const std::uint64_t n = t.size();
  for (std::uint64_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::uint64_t j = 0; ok && j + p < n; ++j) ok = t[j] == t[j + p];
    if (ok) return p;
  }
  return n;
}

}  // namespace

Forest unroll_cut(TreeArena& ar, const Component& c, std::uint32_t d) {
  const auto& trees = c.trees();
  const std::uint64_t len = c.cycle_len();
  const std::uint64_t p = pattern_period(trees);
  std::string key = std::to_string(d) + "#";
  for (std::uint64_t j = 0; j < p; ++j) key += trees[j].code() + ",";

  auto it = ar.unroll_memo.find(key);
  if (it == ar.unroll_memo.end()) {
    std::vector<std::vector<NodeId>> kids(p);
    for (std::uint64_t j = 0; j < p; ++j) {
      for (const auto& k : trees[j].children()) kids[j].push_back(ar.from_transient(k));
    }
    std::vector<NodeId> cur(p, kLeaf), next(p);
    for (std::uint32_t r = 1; r <= d; ++r) {
      for (std::uint64_t j = 0; j < p; ++j) {
        std::vector<Run> ch;
        ch.reserve(kids[j].size() + 1);
        ch.push_back({cur[(j + p - 1) % p], 1});
        for (NodeId k : kids[j]) ch.push_back({ar.cut(k, r - 1), 1});
        next[j] = ar.make(std::move(ch));
      }
      cur.swap(next);
    }
    it = ar.unroll_memo.emplace(std::move(key), std::move(cur)).first;
  }
  std::vector<Run> runs;
  for (NodeId id : it->second) runs.push_back({id, len / p});
  return Forest(std::move(runs));
}

Forest unroll_cut(TreeArena& ar, const Fdds& a, std::uint32_t d) {
  std::vector<Run> runs;
  for (const auto& [c, m] : a.entries()) {
    for (const auto& r : unroll_cut(ar, c, d).runs) runs.push_back({r.id, r.mult * m});
  }
  return Forest(std::move(runs));
}

std::uint64_t sufficient_depth(const Fdds& b) {
  const std::uint64_t alpha = b.cycle_nodes();
  return 2 * alpha * alpha + b.max_depth();
}

namespace {

// Multisets of off-spine children, level by level from the root, up to
// the first level where the spine is ambiguous.
std::vector<std::vector<Run>> hanging(TreeArena& ar, NodeId t) {
  std::vector<std::vector<Run>> out;
  NodeId cur = t;
  while (cur != kLeaf) {
    auto kids = ar.children_copy(cur);
    std::uint32_t best = 0;
    Count at_best = 0;
    NodeId spine = kLeaf;
    for (const auto& r : kids) {
      const auto dep = ar.depth(r.id);
      if (dep > best || at_best == 0) {
        best = dep;
        at_best = r.mult;
        spine = r.id;
      } else if (dep == best) {
        at_best += r.mult;
      }
    }
    if (at_best != 1) break;
    for (auto& r : kids) {
      if (r.id == spine) r.mult -= 1;
    }
    std::erase_if(kids, [](const Run& r) { return r.mult == 0; });
    out.push_back(std::move(kids));
    cur = spine;
  }
  return out;
}

}  // namespace

std::uint64_t min_period(TreeArena& ar, NodeId t) {
  if (t == kLeaf) return 1;
  auto h = hanging(ar, t);
  if (h.empty()) throw std::domain_error("tree has no recognizable spine");
  const std::uint64_t w = h.size();
  for (std::uint64_t p = 1; p < w; ++p) {
    bool ok = true;
    for (std::uint64_t k = 0; ok && k + p < w; ++k) ok = h[k] == h[k + p];
    if (ok) return p;
  }
  return w;
}

Component reconstruct_component(TreeArena& ar, NodeId t, std::uint64_t len) {
  const std::uint64_t p = min_period(ar, t);
  if (len == 0 || len % p) {
    throw std::domain_error("period " + std::to_string(p) +
                            " does not divide cycle length " + std::to_string(len));
  }
  auto h = t == kLeaf ? std::vector<std::vector<Run>>(1) : hanging(ar, t);
  std::vector<TransientTree> pattern(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    std::vector<TransientTree> kids;
    for (const auto& r : h[k]) {
      TransientTree c = ar.to_transient(r.id);
      for (Count i = 0; i < r.mult; ++i) kids.push_back(c);
    }
    pattern[k] = TransientTree::from_children(std::move(kids));
  }
  // Spine level k sits on cycle node -k.
  std::vector<TransientTree> trees(len);
  for (std::uint64_t k = 0; k < len; ++k) trees[(len - k) % len] = pattern[k % p];
  return Component::from_trees(std::move(trees));
}

NodeId min_unroll_tree(TreeArena& ar, const Component& c, std::uint32_t d) {
  return forest_min(ar, unroll_cut(ar, c, d));
}

}  // namespace fdds::unroll
