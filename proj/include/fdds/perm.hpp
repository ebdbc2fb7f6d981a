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

#include <optional>
#include <string>
#include <vector>

#include "fdds/core.hpp"
#include "fdds/numtheory.hpp"

namespace fdds::perm {

struct Seed {
  std::uint64_t g = 0;
  bool pseudo_injective = false;
  bool injective = false;
};

// Why a greedy solver gave up.
enum class Failure {
  none,
  size_overflow,    // the image outgrew the right-hand side
  not_submultiset,  // a subtraction was undefined
  non_integral,     // a multiplicity quotient was not an integer
  length_mismatch,  // the smallest remaining cycle is not a multiple of g
  unroll,           // no solution over the unroll cuts
  period,           // the picked unroll tree has no usable period
};

const char* to_string(Failure f);

// One loop iteration.  For roots `image_*` are powers of X.
struct Step {
  Fdds remainder;
  Fdds x;  // value before the pick
  Fdds picked;
  Fdds image_after;
  Fdds image_before;
};

struct SolveResult {
  std::optional<Fdds> solution;
  Failure failure = Failure::none;
  std::vector<Step> trace;
  explicit operator bool() const { return solution.has_value(); }
};

// Throws std::invalid_argument for a constant polynomial or a coefficient
// with transient states.
Seed classify_perm_poly(const Polynomial& p);

SolveResult kth_root_perm(const Fdds& b, unsigned k);
// Throws std::domain_error when P has no fixed point in a non-constant
// coefficient.
SolveResult solve_injective_perm(const Polynomial& p, const Fdds& b);
// Solve A X = B.  Throws std::domain_error unless A is non-zero and every
// cycle length of A is a multiple of the shortest one.
SolveResult divide_pseudo_cancelable(const Fdds& b, const Fdds& a);
SolveResult solve_pseudo_inj_perm(const Polynomial& p, const Fdds& b);

// Sorted (length, multiplicity) pairs with arbitrary precision.
class CompactPerm {
 public:
  using BigNat = nt::BigNat;
  struct Entry {
    BigNat len, mult;
    bool operator==(const Entry&) const = default;
  };

  CompactPerm() = default;
  static CompactPerm from_entries(std::vector<Entry> e);
  static CompactPerm cycle(const BigNat& len, const BigNat& mult = 1) {
    return from_entries({{len, mult}});
  }
  static CompactPerm encode(const Fdds& a);
  // Throws std::domain_error if the value does not fit an explicit graph.
  Fdds decode() const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  BigNat size() const;
  BigNat mult_of(const BigNat& len) const;
  const Entry& front() const { return entries_.front(); }

  bool operator==(const CompactPerm&) const = default;

 private:
  std::vector<Entry> entries_;
};

struct CompactPoly {
  std::vector<CompactPerm> coeffs;
  static CompactPoly encode(const Polynomial& p);
};

CompactPerm compact_add(const CompactPerm& a, const CompactPerm& b);
CompactPerm compact_multiply(const CompactPerm& a, const CompactPerm& b);
CompactPerm compact_power(const CompactPerm& a, unsigned k);
std::optional<CompactPerm> compact_subtract(const CompactPerm& a,
                                            const CompactPerm& b);
bool compact_submultiset(const CompactPerm& a, const CompactPerm& b);
nt::BigNat compact_poly_size(const CompactPoly& p, const nt::BigNat& x_size);
std::optional<CompactPerm> compact_eval(const CompactPoly& p,
                                        const CompactPerm& x,
                                        const nt::BigNat& budget);
CompactPerm compact_eval(const CompactPoly& p, const CompactPerm& x);
Seed classify_compact(const CompactPoly& p);

struct CompactPick {
  nt::BigNat len, copies;
};

struct CompactResult {
  std::optional<CompactPerm> solution;
  Failure failure = Failure::none;
  std::vector<CompactPick> picks;
  std::size_t probes = 0;
  explicit operator bool() const { return solution.has_value(); }
};

CompactResult solve_pseudo_inj_perm_compact(const CompactPoly& p,
                                            const CompactPerm& b);

}  // namespace fdds::perm
