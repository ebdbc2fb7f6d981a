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

#include "fdds/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace fdds::oracle {

namespace {

void sort_unique(std::vector<Fdds>& v) {
  std::sort(v.begin(), v.end(), FddsLess());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Multisets drawn from pool[from..] (each item of weight w[i]) summing to
// `left`; emit() is called on each, with the current picks.
template <class Emit>
void multisets(const std::vector<unsigned>& w, std::size_t from, unsigned left,
               std::vector<std::size_t>& picks, Emit&& emit) {
  if (left == 0) {
    emit(picks);
    return;
  }
  for (std::size_t i = from; i < w.size(); ++i) {
    if (w[i] > left) continue;
    picks.push_back(i);
    multisets(w, i, left - w[i], picks, emit);
    picks.pop_back();
  }
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void decode_table(std::uint64_t idx, unsigned n, std::vector<std::uint32_t>& t) {
  for (unsigned i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint32_t>(idx % n);
    idx /= n;
  }
}

}  // namespace

std::vector<TransientTree> rooted_trees(unsigned n) {
  if (n == 0) return {};
  // all[k] holds the trees with k nodes.
  std::vector<std::vector<TransientTree>> all(n + 1);
  all[1] = {TransientTree()};
  for (unsigned k = 2; k <= n; ++k) {
    std::vector<TransientTree> pool;
    std::vector<unsigned> w;
    for (unsigned j = 1; j < k; ++j) {
      for (const auto& t : all[j]) {
        pool.push_back(t);
        w.push_back(j);
      }
    }
    std::vector<std::size_t> picks;
    multisets(w, 0, k - 1, picks, [&](const std::vector<std::size_t>& p) {
      std::vector<TransientTree> kids;
      for (auto i : p) kids.push_back(pool[i]);
      all[k].push_back(TransientTree::from_children(std::move(kids)));
    });
    std::sort(all[k].begin(), all[k].end());
  }
  return all[n];
}

std::vector<Component> connected(unsigned n) {
  std::vector<std::vector<TransientTree>> trees(n + 1);
  for (unsigned k = 1; k <= n; ++k) trees[k] = rooted_trees(k);
  std::set<Component> seen;
  std::vector<TransientTree> seq;
  // Sequences of trees around the cycle, total size n.
  auto grow = [&](auto&& self, unsigned left) -> void {
    if (left == 0) {
      seen.insert(Component::from_trees(seq));
      return;
    }
    for (unsigned k = 1; k <= left; ++k) {
      for (const auto& t : trees[k]) {
        seq.push_back(t);
        self(self, left - k);
        seq.pop_back();
      }
    }
  };
  grow(grow, n);
  return {seen.begin(), seen.end()};
}

std::vector<Fdds> by_composition(unsigned n) {
  if (n == 0) return {Fdds()};
  std::vector<Component> pool;
  std::vector<unsigned> w;
  for (unsigned k = 1; k <= n; ++k) {
    for (auto& c : connected(k)) {
      pool.push_back(std::move(c));
      w.push_back(k);
    }
  }
  std::vector<Fdds> out;
  std::vector<std::size_t> picks;
  multisets(w, 0, n, picks, [&](const std::vector<std::size_t>& p) {
    std::vector<Fdds::Entry> e;
    for (auto i : p) e.emplace_back(pool[i], 1);
    out.push_back(Fdds::from_entries(std::move(e)));
  });
  sort_unique(out);
  return out;
}

std::vector<Fdds> by_sweep_serial(unsigned n) {
  if (n == 0) return {Fdds()};
  const std::uint64_t total = ipow(n, n);
  std::set<Fdds, FddsLess> seen;
  std::vector<std::uint32_t> t(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_table(idx, n, t);
    seen.insert(canonicalize(t));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Fdds> by_sweep(unsigned n) {
  if (n == 0) return {Fdds()};
  const auto total = static_cast<std::int64_t>(ipow(n, n));
  std::vector<Fdds> out;
  std::mutex mu;
#pragma omp parallel
  {
    std::set<Fdds, FddsLess> seen;
    std::vector<std::uint32_t> t(n);
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode_table(static_cast<std::uint64_t>(idx), n, t);
      seen.insert(canonicalize(t));
    }
    std::lock_guard lock(mu);
    out.insert(out.end(), seen.begin(), seen.end());
  }
  sort_unique(out);
  return out;
}

std::size_t OracleIndex::total() const {
  std::size_t s = 0;
  for (const auto& v : by_size) s += v.size();
  return s;
}

OracleIndex enumerate_fdds(unsigned max_states, unsigned limit) {
  if (max_states > limit) {
    throw std::length_error("enumeration limited to " + std::to_string(limit) +
                            " states");
  }
  OracleIndex idx;
  idx.max_states = max_states;
  idx.by_size.resize(max_states + 1);
  for (unsigned n = 0; n <= max_states; ++n) idx.by_size[n] = by_composition(n);
  return idx;
}

namespace {

template <bool Parallel>
std::vector<Fdds> solve_sized(const Polynomial& p, const Fdds& b,
                              const std::vector<unsigned>& sizes,
                              const auto& catalog_of) {
  std::vector<Fdds> hits;
  for (unsigned s : sizes) {
    std::span<const Fdds> cand = catalog_of(s);
    const auto m = static_cast<std::int64_t>(cand.size());
    if constexpr (Parallel) {
      std::mutex mu;
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < m; ++i) {
        auto v = eval_poly(p, cand[i], b.size());
        if (v && *v == b) {
          std::lock_guard lock(mu);
          hits.push_back(cand[i]);
        }
      }
    } else {
      for (std::int64_t i = 0; i < m; ++i) {
        auto v = eval_poly(p, cand[i], b.size());
        if (v && *v == b) hits.push_back(cand[i]);
      }
    }
  }
  sort_unique(hits);
  return hits;
}

std::vector<unsigned> matching_sizes(const Polynomial& p, const Fdds& b,
                                     unsigned max_states) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s <= max_states; ++s) {
    if (poly_size(p, s) == b.size()) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Fdds> oracle_solve(const Polynomial& p, const Fdds& b,
                               const OracleIndex& index) {
  return solve_sized<true>(p, b, matching_sizes(p, b, index.max_states),
                           [&](unsigned s) { return index.of_size(s); });
}

std::vector<Fdds> oracle_solve_serial(const Polynomial& p, const Fdds& b,
                                      const OracleIndex& index) {
  return solve_sized<false>(p, b, matching_sizes(p, b, index.max_states),
                            [&](unsigned s) { return index.of_size(s); });
}

std::vector<Fdds> oracle_solve(const Polynomial& p, const Fdds& b,
                               unsigned max_states, unsigned limit) {
  if (max_states > limit) {
    throw std::length_error("enumeration limited to " + std::to_string(limit) +
                            " states");
  }
  std::map<unsigned, std::vector<Fdds>> cache;
  return solve_sized<true>(p, b, matching_sizes(p, b, max_states),
                           [&](unsigned s) -> std::span<const Fdds> {
                             auto it = cache.find(s);
                             if (it == cache.end()) it = cache.emplace(s, by_composition(s)).first;
                             return it->second;
                           });
}

}  // namespace fdds::oracle
