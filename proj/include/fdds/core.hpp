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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fdds {

using Count = std::uint64_t;

// Rooted unordered tree kept as its canonical parenthesis code.  A leaf
// is "()"; children codes appear in sorted order.
class TransientTree {
 public:
  TransientTree() : code_("()") {}

  static TransientTree from_children(std::vector<TransientTree> kids);
  // Accepts any balanced code and returns the canonical tree.
  static TransientTree parse(std::string_view code);

  const std::string& code() const { return code_; }
  std::uint32_t depth() const { return depth_; }
  Count size() const { return size_; }
  bool is_leaf() const { return size_ == 1; }
  std::vector<TransientTree> children() const;

  friend bool operator==(const TransientTree& a, const TransientTree& b) {
    return a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const TransientTree& a,
                                          const TransientTree& b) {
    return a.code_ <=> b.code_;
  }

 private:
  std::string code_;
  std::uint32_t depth_ = 0;
  Count size_ = 1;
};

// A connected FDDS: trees()[j] hangs on cycle node j and node j maps to
// node j+1.  The stored rotation is the lexicographically least one.
class Component {
 public:
  static Component cycle(std::uint64_t len);
  static Component from_trees(std::vector<TransientTree> trees);

  std::uint64_t cycle_len() const { return trees_.size(); }
  const std::vector<TransientTree>& trees() const { return trees_; }
  bool is_cycle() const;
  Count size() const;
  std::uint32_t depth() const;

  friend bool operator==(const Component&, const Component&) = default;
  friend std::strong_ordering operator<=>(const Component& a,
                                          const Component& b);

 private:
  std::vector<TransientTree> trees_;
};

struct ComponentHash {
  std::size_t operator()(const Component& c) const noexcept;
};

class Fdds {
 public:
  using Entry = std::pair<Component, Count>;

  Fdds() = default;
  explicit Fdds(Component c, Count mult = 1);
  static Fdds from_entries(std::vector<Entry> entries);
  static Fdds cycle(std::uint64_t len, Count mult = 1) {
    return Fdds(Component::cycle(len), mult);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Count size() const;
  Count cycle_nodes() const;
  std::uint32_t max_depth() const;
  // 0 for the empty value.
  std::uint64_t min_cycle_len() const;
  std::vector<std::uint64_t> cycle_lengths() const;
  Count component_count() const;
  bool is_permutation() const;
  Count multiplicity(const Component& c) const;
  // Smallest component in canonical order; the value must be non-empty.
  const Component& first() const { return entries_.front().first; }

  friend bool operator==(const Fdds&, const Fdds&) = default;

 private:
  std::vector<Entry> entries_;
};

struct Polynomial {
  std::vector<Fdds> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Fdds> c);
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Fdds& operator[](std::size_t i) const { return coeffs[i]; }
  bool has_nonconstant() const;
  Polynomial without_constant() const;
  Fdds constant() const { return coeffs.empty() ? Fdds() : coeffs[0]; }
  Count coeff_size_sum() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// Throws std::invalid_argument for an out-of-range successor.
Fdds canonicalize(std::span<const std::uint32_t> succ);
// A function table realizing the value; canonicalize(to_table(a)) == a.
std::vector<std::uint32_t> to_table(const Fdds& a);
std::vector<std::uint32_t> to_table(const Component& c);

Fdds add(const Fdds& a, const Fdds& b);
Fdds multiply(const Fdds& a, const Fdds& b);
Fdds multiply(const Component& a, const Component& b);
Fdds scale(const Fdds& a, Count k);
Fdds power(const Fdds& a, unsigned k);
std::optional<Fdds> subtract(const Fdds& a, const Fdds& b);
// True when a is a submultiset of b.
bool is_submultiset(const Fdds& a, const Fdds& b);
Fdds comps_len_div(const Fdds& a, std::uint64_t p);

inline Fdds operator+(const Fdds& a, const Fdds& b) { return add(a, b); }
inline Fdds operator*(const Fdds& a, const Fdds& b) { return multiply(a, b); }

// nullopt when |P(X)| would exceed budget; sizes are checked before any
// product is formed.
std::optional<Fdds> eval_poly(const Polynomial& p, const Fdds& x,
                              Count budget);
Fdds eval_poly(const Polynomial& p, const Fdds& x);
// Exact |P(X)| from sizes alone, saturating at UINT64_MAX.
Count poly_size(const Polynomial& p, Count x_size);

using ComponentLess = std::function<bool(const Component&, const Component&)>;
Fdds prefix(const Fdds& x, std::size_t i, const ComponentLess& less = {});
Fdds super_prefix(const Fdds& x, std::size_t i,
                  const ComponentLess& less = {});

}  // namespace fdds
