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
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "fdds/core.hpp"

namespace fdds {

namespace {

constexpr Count kSaturated = std::numeric_limits<Count>::max();

Count sat_mul(Count a, Count b) {
  Count r;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

Count sat_add(Count a, Count b) {
  Count r;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

struct PairKey {
  Component a, b;
  bool operator==(const PairKey&) const = default;
};

struct PairHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    ComponentHash h;
    return h(k.a) * 31 + h(k.b);
  }
};

// Products of connected components, per thread.  Values are immutable so
// caching never changes results.
const Fdds& component_product(const Component& a, const Component& b) {
  thread_local std::unordered_map<PairKey, Fdds, PairHash> cache;
  const bool swap = b < a;
  PairKey key{swap ? b : a, swap ? a : b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (cache.size() > (1u << 16)) cache.clear();
  auto ta = to_table(key.a);
  auto tb = to_table(key.b);
  const std::size_t nb = tb.size();
  std::vector<std::uint32_t> succ(ta.size() * nb);
  for (std::size_t u = 0; u < ta.size(); ++u) {
    for (std::size_t v = 0; v < nb; ++v) {
      succ[u * nb + v] = static_cast<std::uint32_t>(ta[u] * nb + tb[v]);
    }
  }
  return cache.emplace(std::move(key), canonicalize(succ)).first->second;
}

}  // namespace

Fdds::Fdds(Component c, Count mult) {
  if (mult) entries_.emplace_back(std::move(c), mult);
}

Fdds Fdds::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.first < y.first; });
  Fdds out;
  for (auto& e : entries) {
    if (e.second == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
    } else {
      out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

Count Fdds::size() const {
  Count s = 0;
  for (const auto& [c, m] : entries_) s = sat_add(s, sat_mul(c.size(), m));
  return s;
}

Count Fdds::cycle_nodes() const {
  Count s = 0;
  for (const auto& [c, m] : entries_) s = sat_add(s, sat_mul(c.cycle_len(), m));
  return s;
}

std::uint32_t Fdds::max_depth() const {
  std::uint32_t d = 0;
  for (const auto& e : entries_) d = std::max(d, e.first.depth());
  return d;
}

std::uint64_t Fdds::min_cycle_len() const {
  return entries_.empty() ? 0 : entries_.front().first.cycle_len();
}

std::vector<std::uint64_t> Fdds::cycle_lengths() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries_) {
    if (out.empty() || out.back() != e.first.cycle_len()) {
      out.push_back(e.first.cycle_len());
    }
  }
  return out;
}

Count Fdds::component_count() const {
  Count s = 0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

bool Fdds::is_permutation() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.first.is_cycle(); });
}

Count Fdds::multiplicity(const Component& c) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), c,
      [](const Entry& e, const Component& k) { return e.first < k; });
  return it != entries_.end() && it->first == c ? it->second : 0;
}

Polynomial::Polynomial(std::vector<Fdds> c) : coeffs(std::move(c)) {
  while (coeffs.size() > 1 && coeffs.back().empty()) coeffs.pop_back();
}

bool Polynomial::has_nonconstant() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (!coeffs[i].empty()) return true;
  }
  return false;
}

Polynomial Polynomial::without_constant() const {
  Polynomial q = *this;
  if (!q.coeffs.empty()) q.coeffs[0] = Fdds();
  return q;
}

Count Polynomial::coeff_size_sum() const {
  Count s = 0;
  for (const auto& c : coeffs) s += c.size();
  return s;
}

Fdds add(const Fdds& a, const Fdds& b) {
  std::vector<Fdds::Entry> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Fdds::from_entries(std::move(e));
}

Fdds scale(const Fdds& a, Count k) {
  std::vector<Fdds::Entry> e = a.entries();
  for (auto& x : e) x.second *= k;
  return Fdds::from_entries(std::move(e));
}

Fdds multiply(const Component& a, const Component& b) {
  return component_product(a, b);
}

Fdds multiply(const Fdds& a, const Fdds& b) {
  std::vector<Fdds::Entry> out;
  for (const auto& [ca, ma] : a.entries()) {
    for (const auto& [cb, mb] : b.entries()) {
      for (const auto& [c, m] : component_product(ca, cb).entries()) {
        out.emplace_back(c, m * ma * mb);
      }
    }
  }
  return Fdds::from_entries(std::move(out));
}

Fdds power(const Fdds& a, unsigned k) {
  Fdds r = Fdds::cycle(1);
  Fdds base = a;
  while (k) {
    if (k & 1) r = multiply(r, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return r;
}

std::optional<Fdds> subtract(const Fdds& a, const Fdds& b) {
  std::vector<Fdds::Entry> out;
  auto ia = a.entries().begin(), ea = a.entries().end();
  for (const auto& [c, m] : b.entries()) {
    while (ia != ea && ia->first < c) out.push_back(*ia++);
    if (ia == ea || ia->first != c || ia->second < m) return std::nullopt;
    if (ia->second > m) out.emplace_back(c, ia->second - m);
    ++ia;
  }
  out.insert(out.end(), ia, ea);
  return Fdds::from_entries(std::move(out));
}

bool is_submultiset(const Fdds& a, const Fdds& b) {
  auto ib = b.entries().begin(), eb = b.entries().end();
  for (const auto& [c, m] : a.entries()) {
    while (ib != eb && ib->first < c) ++ib;
    if (ib == eb || ib->first != c || ib->second < m) return false;
  }
  return true;
}

Fdds comps_len_div(const Fdds& a, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("comps_len_div: p must be positive");
  std::vector<Fdds::Entry> out;
  for (const auto& e : a.entries()) {
    if (p % e.first.cycle_len() == 0) out.push_back(e);
  }
  return Fdds::from_entries(std::move(out));
}

Count poly_size(const Polynomial& p, Count x_size) {
  Count total = 0, xp = 1;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) xp = sat_mul(xp, x_size);
    total = sat_add(total, sat_mul(p.coeffs[i].size(), xp));
  }
  return total;
}

std::optional<Fdds> eval_poly(const Polynomial& p, const Fdds& x,
                              Count budget) {
  if (poly_size(p, x.size()) > budget) return std::nullopt;
  return eval_poly(p, x);
}

Fdds eval_poly(const Polynomial& p, const Fdds& x) {
  Fdds acc;
  Fdds xp = Fdds::cycle(1);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) xp = multiply(xp, x);
    if (!p.coeffs[i].empty()) acc = add(acc, multiply(p.coeffs[i], xp));
  }
  return acc;
}

namespace {

std::vector<Fdds::Entry> sorted_entries(const Fdds& x,
                                        const ComponentLess& less) {
  std::vector<Fdds::Entry> e = x.entries();
  if (less) {
    std::stable_sort(e.begin(), e.end(), [&](const auto& a, const auto& b) {
      return less(a.first, b.first);
    });
  }
  return e;
}

}  // namespace

Fdds prefix(const Fdds& x, std::size_t i, const ComponentLess& less) {
  std::vector<Fdds::Entry> out;
  for (const auto& [c, m] : sorted_entries(x, less)) {
    if (i == 0) break;
    Count take = std::min<Count>(m, i);
    out.emplace_back(c, take);
    i -= take;
  }
  return Fdds::from_entries(std::move(out));
}

Fdds super_prefix(const Fdds& x, std::size_t i, const ComponentLess& less) {
  auto e = sorted_entries(x, less);
  if (i < e.size()) e.resize(i);
  return Fdds::from_entries(std::move(e));
}

}  // namespace fdds
