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

#include "fdds/tree_arena.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdds::unroll {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::size_t hash_runs(const Run* p, std::size_t n) {
  std::uint64_t h = n;
  for (std::size_t i = 0; i < n; ++i) {
    h = mix(h ^ p[i].id);
    h = mix(h ^ p[i].mult);
  }
  return static_cast<std::size_t>(h);
}

void normalize(std::vector<Run>& v) {
  std::sort(v.begin(), v.end(),
            [](const Run& a, const Run& b) { return a.id < b.id; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].mult == 0) continue;
    if (w && v[w - 1].id == v[i].id) {
      v[w - 1].mult += v[i].mult;
    } else {
      v[w++] = v[i];
    }
  }
  v.resize(w);
}

// n^k <= limit, without overflow.
bool ipow_at_most(Count n, unsigned k, Count limit) {
  Count r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n && r > limit / n) return false;
    r *= n;
  }
  return r <= limit;
}

}  // namespace

Forest::Forest(std::vector<Run> r) : runs(std::move(r)) { normalize(runs); }

Count Forest::count() const {
  Count s = 0;
  for (const auto& r : runs) s += r.mult;
  return s;
}

Count Forest::mult_of(NodeId t) const {
  auto it = std::lower_bound(runs.begin(), runs.end(), t,
                             [](const Run& r, NodeId id) { return r.id < id; });
  return it != runs.end() && it->id == t ? it->mult : 0;
}

TreeArena::TreeArena() : intern_(0, Hasher{this}, Equal{this}) {
  make({});
  paths_.push_back(kLeaf);
}

bool TreeArena::matches(const Probe& p, NodeId y) const {
  const Node& n = nodes_[y];
  return n.len == p.n && std::equal(p.p, p.p + p.n, pool_.begin() + n.off);
}

NodeId TreeArena::make(std::vector<Run> children) {
  normalize(children);
  Probe probe{children.data(), children.size(),
              hash_runs(children.data(), children.size())};
  if (auto it = intern_.find(probe); it != intern_.end()) return *it;
  Node n;
  n.depth = 0;
  n.kids = 0;
  n.off = pool_.size();
  n.len = children.size();
  n.hash = probe.hash;
  n.is_path = children.empty() ||
              (children.size() == 1 && children[0].mult == 1 && nodes_[children[0].id].is_path);
  for (const auto& r : children) {
    n.depth = std::max(n.depth, nodes_[r.id].depth + 1);
    n.kids += r.mult;
  }
  pool_.insert(pool_.end(), children.begin(), children.end());
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(n);
  intern_.insert(id);
  return id;
}

std::span<const Run> TreeArena::children(NodeId t) const {
  const Node& n = nodes_[t];
  return {pool_.data() + n.off, n.len};
}

std::vector<Run> TreeArena::children_copy(NodeId t) const {
  auto s = children(t);
  return {s.begin(), s.end()};
}

std::vector<Run> TreeArena::ordered_children(NodeId t) {
  if (nodes_[t].ord_off == npos) {
    auto kids = children_copy(t);
    std::sort(kids.begin(), kids.end(), [this](const Run& x, const Run& y) {
      return order(x.id, y.id).sign > 0;
    });
    nodes_[t].ord_off = ordered_pool_.size();
    ordered_pool_.insert(ordered_pool_.end(), kids.begin(), kids.end());
    return kids;
  }
  const Node& n = nodes_[t];
  return {ordered_pool_.begin() + n.ord_off,
          ordered_pool_.begin() + n.ord_off + n.len};
}

NodeId TreeArena::path(std::uint32_t d) {
  while (paths_.size() <= d) paths_.push_back(make({{paths_.back(), 1}}));
  return paths_[d];
}

NodeId TreeArena::cut(NodeId t, std::uint32_t d) {
  if (d == 0) return kLeaf;
  if (nodes_[t].depth <= d) return t;
  const auto k = key(t, d);
  if (auto it = cut_memo_.find(k); it != cut_memo_.end()) return it->second;
  auto kids = children_copy(t);
  for (auto& r : kids) r.id = cut(r.id, d - 1);
  NodeId out = make(std::move(kids));
  cut_memo_.emplace(k, out);
  return out;
}

NodeId TreeArena::product(NodeId a, NodeId b) {
  if (a == kLeaf || b == kLeaf) return kLeaf;
  if (nodes_[a].is_path) return cut(b, nodes_[a].depth);
  if (nodes_[b].is_path) return cut(a, nodes_[b].depth);
  if (a > b) std::swap(a, b);
  const auto k = key(a, b);
  if (auto it = product_memo_.find(k); it != product_memo_.end()) return it->second;
  auto ka = children_copy(a);
  auto kb = children_copy(b);
  std::vector<Run> out;
  out.reserve(ka.size() * kb.size());
  for (const auto& x : ka) {
    for (const auto& y : kb) out.push_back({product(x.id, y.id), x.mult * y.mult});
  }
  NodeId id = make(std::move(out));
  product_memo_.emplace(k, id);
  return id;
}

NodeId TreeArena::power(NodeId a, unsigned k) {
  NodeId r = path(nodes_[a].depth);
  for (unsigned i = 0; i < k; ++i) r = product(r, a);
  return r;
}

Order TreeArena::order(NodeId a, NodeId b) {
  if (a == b) return {Order::kSame, 0};
  const Count na = nodes_[a].kids, nb = nodes_[b].kids;
  if (na != nb) return {0, na > nb ? 1 : -1};
  const bool flip = a > b;
  if (flip) std::swap(a, b);
  const auto k = key(a, b);
  auto found = order_memo_.find(k);
  Order o;
  if (found != order_memo_.end()) {
    o = found->second;
  } else {
    auto oa = ordered_children(a);
    auto ob = ordered_children(b);
    Order best{Order::kSame, 0};
    std::size_t i = 0, j = 0;
    Count ra = oa.empty() ? 0 : oa[0].mult, rb = ob.empty() ? 0 : ob[0].mult;
    while (i < oa.size() && j < ob.size()) {
      const Count span = std::min(ra, rb);
      if (oa[i].id != ob[j].id) {
        Order c = order(oa[i].id, ob[j].id);
        if (c.agree < best.agree) best = c;
      }
      ra -= span;
      rb -= span;
      if (ra == 0 && ++i < oa.size()) ra = oa[i].mult;
      if (rb == 0 && ++j < ob.size()) rb = ob[j].mult;
    }
    o = {best.agree == Order::kSame ? Order::kSame : best.agree + 1, best.sign};
    order_memo_.emplace(k, o);
  }
  if (flip) o.sign = -o.sign;
  return o;
}

std::optional<NodeId> TreeArena::divide(NodeId b, NodeId a) {
  if (nodes_[a].depth < nodes_[b].depth) return std::nullopt;
  if (b == kLeaf || nodes_[a].is_path) return b;
  if (nodes_[b].kids % nodes_[a].kids) return std::nullopt;
  const auto k = key(b, a);
  if (auto it = divide_memo_.find(k); it != divide_memo_.end()) {
    return it->second == kNone ? std::nullopt : std::optional<NodeId>(it->second);
  }
  NodeId result = kNone;
  const NodeId a2 = cut(a, nodes_[b].depth);
  std::optional<NodeId> cand;
  if (nodes_[a2].len == 1 && nodes_[a2].kids == 1) {
    // One child: every child of b is divided by it on its own.
    const NodeId ac = children(a2)[0].id;
    std::vector<Run> xs = children_copy(b);
    bool ok = true;
    for (auto& r : xs) {
      auto q = divide(r.id, ac);
      if (!q) {
        ok = false;
        break;
      }
      r.id = *q;
    }
    if (ok) cand = make(std::move(xs));
  } else {
    std::vector<Forest> p{Forest(), Forest(children_copy(a2))};
    if (auto x = solve_forest_poly(*this, p, Forest(children_copy(b)))) cand = make(x->runs);
  }
  if (cand && nodes_[*cand].depth == nodes_[b].depth && product(a, *cand) == b) {
    result = *cand;
  }
  divide_memo_.emplace(k, result);
  return result == kNone ? std::nullopt : std::optional<NodeId>(result);
}

std::optional<NodeId> TreeArena::root(NodeId b, unsigned k) {
  if (k == 1 || b == kLeaf) return b;
  const auto mk = key(b, k);
  if (auto it = root_memo_.find(mk); it != root_memo_.end()) {
    return it->second == kNone ? std::nullopt : std::optional<NodeId>(it->second);
  }
  NodeId result = kNone;
  // |X|^k children at the root.
  Count n = 1;
  while (ipow_at_most(n + 1, k, nodes_[b].kids)) ++n;
  std::optional<NodeId> cand;
  if (!ipow_at_most(n, k, nodes_[b].kids - 1)) {
    if (n == 1) {
      if (auto q = root(children(b)[0].id, k)) cand = make({{*q, 1}});
    } else {
      std::vector<Forest> p(k + 1);
      p[k] = Forest::single(path(nodes_[b].depth - 1));
      if (auto x = solve_forest_poly(*this, p, Forest(children_copy(b)))) cand = make(x->runs);
    }
  }
  if (cand && power(*cand, k) == b) result = *cand;
  root_memo_.emplace(mk, result);
  return result == kNone ? std::nullopt : std::optional<NodeId>(result);
}

NodeId TreeArena::from_transient(const TransientTree& t) {
  if (t.is_leaf()) return kLeaf;
  if (auto it = transient_in_.find(t.code()); it != transient_in_.end()) {
    return it->second;
  }
  std::vector<Run> kids;
  for (const auto& c : t.children()) kids.push_back({from_transient(c), 1});
  NodeId id = make(std::move(kids));
  transient_in_.emplace(t.code(), id);
  return id;
}

TransientTree TreeArena::to_transient(NodeId t) {
  if (t == kLeaf) return TransientTree();
  if (auto it = transient_out_.find(t); it != transient_out_.end()) {
    return it->second;
  }
  std::vector<TransientTree> kids;
  for (const auto& r : children_copy(t)) {
    TransientTree c = to_transient(r.id);
    for (Count i = 0; i < r.mult; ++i) kids.push_back(c);
  }
  TransientTree out = TransientTree::from_children(std::move(kids));
  transient_out_.emplace(t, out);
  return out;
}

Forest forest_add(const Forest& a, const Forest& b) {
  std::vector<Run> r = a.runs;
  r.insert(r.end(), b.runs.begin(), b.runs.end());
  return Forest(std::move(r));
}

std::optional<Forest> forest_subtract(const Forest& a, const Forest& b) {
  Forest out;
  auto ia = a.runs.begin(), ea = a.runs.end();
  for (const auto& y : b.runs) {
    while (ia != ea && ia->id < y.id) out.runs.push_back(*ia++);
    if (ia == ea || ia->id != y.id || ia->mult < y.mult) return std::nullopt;
    if (ia->mult > y.mult) out.runs.push_back({y.id, ia->mult - y.mult});
    ++ia;
  }
  out.runs.insert(out.runs.end(), ia, ea);
  return out;
}

bool forest_submultiset(const Forest& a, const Forest& b) {
  auto ib = b.runs.begin(), eb = b.runs.end();
  for (const auto& x : a.runs) {
    while (ib != eb && ib->id < x.id) ++ib;
    if (ib == eb || ib->id != x.id || ib->mult < x.mult) return false;
  }
  return true;
}

Forest forest_scale(const Forest& a, Count k) {
  std::vector<Run> r = a.runs;
  for (auto& x : r) x.mult *= k;
  return Forest(std::move(r));
}

Forest forest_multiply(TreeArena& ar, const Forest& a, const Forest& b) {
  std::vector<Run> r;
  r.reserve(a.runs.size() * b.runs.size());
  for (const auto& x : a.runs) {
    for (const auto& y : b.runs) r.push_back({ar.product(x.id, y.id), x.mult * y.mult});
  }
  return Forest(std::move(r));
}

Forest forest_power(TreeArena& ar, const Forest& a, unsigned k) {
  if (k == 0) throw std::invalid_argument("forest_power: exponent 0 has no finite unit");
  Forest r = a;
  for (unsigned i = 1; i < k; ++i) r = forest_multiply(ar, r, a);
  return r;
}

NodeId forest_min(TreeArena& ar, const Forest& a) {
  NodeId best = a.runs.front().id;
  for (const auto& r : a.runs) {
    if (ar.compare(r.id, best) < 0) best = r.id;
  }
  return best;
}

Forest tall_trees(TreeArena& ar, const Forest& a, std::uint32_t d) {
  Forest out;
  for (const auto& r : a.runs) {
    if (ar.depth(r.id) >= d) out.runs.push_back(r);
  }
  return out;
}

Forest forest_cut(TreeArena& ar, const Forest& a, std::uint32_t d) {
  std::vector<Run> r;
  for (const auto& x : a.runs) r.push_back({ar.cut(x.id, d), x.mult});
  return Forest(std::move(r));
}

}  // namespace fdds::unroll
