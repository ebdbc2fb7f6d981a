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

// Independent reference computations shared by the test binaries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "fdds/core.hpp"
#include "fdds/io.hpp"
#include "fdds/oracle.hpp"

namespace fdds::testing {

inline Fdds E(const char* s) { return io::parse_expr(s); }
inline Polynomial P(const char* s) { return io::parse_poly(s); }

using Table = std::vector<std::uint32_t>;

// Direct product of two function tables.
inline Table table_product(const Table& f, const Table& g) {
  Table out(f.size() * g.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i * g.size() + j] = static_cast<std::uint32_t>(f[i] * g.size() + g[j]);
    }
  }
  return out;
}

inline Table table_sum(const Table& f, const Table& g) {
  Table out = f;
  for (auto v : g) out.push_back(static_cast<std::uint32_t>(v + f.size()));
  return out;
}

// Product through the raw graphs.
inline Fdds product_oracle(const Fdds& a, const Fdds& b) {
  return canonicalize(table_product(to_table(a), to_table(b)));
}

// Isomorphism by trying every relabelling; tiny tables only.
inline bool isomorphic(const Table& f, const Table& g) {
  if (f.size() != g.size()) return false;
  std::vector<std::uint32_t> pi(f.size());
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < f.size(); ++i) ok = pi[f[i]] == g[pi[i]];
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

// Every value with 0..n states, 0 first.
inline std::vector<Fdds> values_upto(unsigned n) {
  std::vector<Fdds> out;
  for (unsigned s = 0; s <= n; ++s) {
    auto v = oracle::by_composition(s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

inline std::vector<Fdds> permutations_upto(unsigned n) {
  std::vector<Fdds> out;
  for (const auto& v : values_upto(n)) {
    if (v.is_permutation()) out.push_back(v);
  }
  return out;
}

inline Table random_table(std::mt19937_64& rng, std::size_t n) {
  Table t(n);
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(n - 1));
  for (auto& v : t) v = d(rng);
  return t;
}

inline Table relabel(const Table& f, std::mt19937_64& rng) {
  std::vector<std::uint32_t> pi(f.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  Table g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[pi[i]] = pi[f[i]];
  return g;
}

}  // namespace fdds::testing
