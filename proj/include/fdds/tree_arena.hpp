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

#pragma once

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fdds/core.hpp"

namespace fdds::unroll {

using NodeId = std::uint32_t;
inline constexpr NodeId kLeaf = 0;

struct Run {
  NodeId id;
  Count mult;
  bool operator==(const Run&) const = default;
};

// Multiset of trees, runs sorted by id.
struct Forest {
  std::vector<Run> runs;

  Forest() = default;
  explicit Forest(std::vector<Run> r);
  static Forest single(NodeId t, Count m = 1) { return Forest({{t, m}}); }
  bool empty() const { return runs.empty(); }
  Count count() const;
  Count mult_of(NodeId t) const;
  bool operator==(const Forest&) const = default;
};

// Agreement depth and sign of a tree comparison.  `agree` is one less
// than the shallowest cut depth at which the two trees differ.
struct Order {
  static constexpr std::uint32_t kSame = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t agree;
  int sign;
};

// Hash-consed rooted trees.  Equal trees share one id, so equality is id
// comparison and every kernel memoizes on ids.  An arena is not
// thread-safe; give each worker its own.
class TreeArena {
 public:
  TreeArena();
  TreeArena(const TreeArena&) = delete;
  TreeArena& operator=(const TreeArena&) = delete;

  NodeId make(std::vector<Run> children);
  std::uint32_t depth(NodeId t) const { return nodes_[t].depth; }
  Count child_count(NodeId t) const { return nodes_[t].kids; }
  // Sorted by id.  The span is invalidated by the next make().
  std::span<const Run> children(NodeId t) const;
  std::vector<Run> children_copy(NodeId t) const;
  // Children in descending tree order.
  std::vector<Run> ordered_children(NodeId t);
  std::size_t size() const { return nodes_.size(); }
  bool is_path(NodeId t) const { return nodes_[t].is_path; }

  NodeId path(std::uint32_t d);
  NodeId cut(NodeId t, std::uint32_t d);
  NodeId product(NodeId a, NodeId b);
  NodeId power(NodeId a, unsigned k);
  Order order(NodeId a, NodeId b);
  int compare(NodeId a, NodeId b) { return order(a, b).sign; }
  // x with a*x = b and depth(x) = depth(b).
  std::optional<NodeId> divide(NodeId b, NodeId a);
  // x with x^k = b.
  std::optional<NodeId> root(NodeId b, unsigned k);

  NodeId from_transient(const TransientTree& t);
  TransientTree to_transient(NodeId t);

  // Memo for unroll cuts keyed by component pattern and depth.
  std::unordered_map<std::string, std::vector<NodeId>> unroll_memo;

 private:
  struct Node {
    std::uint32_t depth;
    std::size_t off, len;
    Count kids;
    std::size_t hash;
    std::size_t ord_off = npos;
    bool is_path;
  };
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

  struct Probe {
    const Run* p;
    std::size_t n;
    std::size_t hash;
  };
  struct Hasher {
    using is_transparent = void;
    const TreeArena* a;
    std::size_t operator()(NodeId id) const { return a->nodes_[id].hash; }
    std::size_t operator()(const Probe& p) const { return p.hash; }
  };
  struct Equal {
    using is_transparent = void;
    const TreeArena* a;
    bool operator()(NodeId x, NodeId y) const { return x == y; }
    bool operator()(const Probe& p, NodeId y) const { return a->matches(p, y); }
    bool operator()(NodeId y, const Probe& p) const { return a->matches(p, y); }
  };

  bool matches(const Probe& p, NodeId y) const;
  static std::uint64_t key(NodeId a, std::uint64_t b) { return (std::uint64_t{a} << 32) | b; }

  std::vector<Node> nodes_;
  std::vector<Run> pool_;
  std::vector<Run> ordered_pool_;
  absl::flat_hash_set<NodeId, Hasher, Equal> intern_;
  std::vector<NodeId> paths_;
  absl::flat_hash_map<std::uint64_t, NodeId> cut_memo_, product_memo_,
      divide_memo_, root_memo_;
  absl::flat_hash_map<std::uint64_t, Order> order_memo_;
  std::unordered_map<std::string, NodeId> transient_in_;
  std::unordered_map<NodeId, TransientTree> transient_out_;
};

Forest forest_add(const Forest& a, const Forest& b);
std::optional<Forest> forest_subtract(const Forest& a, const Forest& b);
bool forest_submultiset(const Forest& a, const Forest& b);
Forest forest_scale(const Forest& a, Count k);
Forest forest_multiply(TreeArena& ar, const Forest& a, const Forest& b);
Forest forest_power(TreeArena& ar, const Forest& a, unsigned k);
// The least tree; the forest must be non-empty.
NodeId forest_min(TreeArena& ar, const Forest& a);
Forest tall_trees(TreeArena& ar, const Forest& a, std::uint32_t d);
Forest forest_cut(TreeArena& ar, const Forest& a, std::uint32_t d);

// Solve sum_i P[i] X^i = B over finite forests.  The constant term, if
// any, is removed first.
std::optional<Forest> solve_forest_poly(TreeArena& ar,
                                        const std::vector<Forest>& p,
                                        const Forest& b);

}  // namespace fdds::unroll
