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

#include <span>
#include <vector>

#include "fdds/core.hpp"

namespace fdds::oracle {

// Total order on values, only for sorting and deduplication.
struct FddsLess {
  bool operator()(const Fdds& a, const Fdds& b) const {
    return a.entries() < b.entries();
  }
};

// Every value with exactly n states.  Sorted by FddsLess.
std::vector<Fdds> by_composition(unsigned n);
// Same catalog from all n^n function tables.
std::vector<Fdds> by_sweep(unsigned n);
std::vector<Fdds> by_sweep_serial(unsigned n);

// Rooted trees with n nodes, sorted.
std::vector<TransientTree> rooted_trees(unsigned n);
// Connected values with n states, sorted.
std::vector<Component> connected(unsigned n);

struct OracleIndex {
  unsigned max_states = 0;
  std::vector<std::vector<Fdds>> by_size;  // by_size[0] = {0}
  std::span<const Fdds> of_size(unsigned n) const { return by_size.at(n); }
  std::size_t total() const;
};

// Throws std::length_error when max_states exceeds limit.
OracleIndex enumerate_fdds(unsigned max_states, unsigned limit = 10);

// All X with 1 <= |X| <= max_states and P(X) = B, sorted.
std::vector<Fdds> oracle_solve(const Polynomial& p, const Fdds& b,
                               unsigned max_states, unsigned limit = 12);
std::vector<Fdds> oracle_solve(const Polynomial& p, const Fdds& b,
                               const OracleIndex& index);
std::vector<Fdds> oracle_solve_serial(const Polynomial& p, const Fdds& b,
                                      const OracleIndex& index);

}  // namespace fdds::oracle
