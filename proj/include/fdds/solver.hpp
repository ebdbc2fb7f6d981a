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
#include <optional>
#include <vector>

#include "fdds/core.hpp"
#include "fdds/perm.hpp"

namespace fdds::solver {

using perm::Failure;
using perm::Seed;

// Throws std::invalid_argument for a constant polynomial.
Seed classify_fdds_poly(const Polynomial& p);

// Cycle length, then least unroll tree, then canonical key.
std::strong_ordering compare_ct(const Component& a, const Component& b);
// Least component under compare_ct; x must be non-empty.
Component min_component_ct(const Fdds& x);
// Compares the least components of P(x) and P(y), then x and y.  P must
// have no constant term.
std::strong_ordering compare_lep(const Polynomial& p, const Component& x,
                                 const Component& y);

struct SolveOptions {
  // Added to the unroll depth; the answer must not depend on it.
  std::uint64_t depth_extra = 0;
};

struct Iteration {
  Fdds remainder;
  Component picked;
  std::uint64_t lambda = 0;  // shortest cycle of the remainder
  std::uint64_t period = 0;  // of the picked unroll tree
  std::uint64_t depth = 0;   // unroll depth used
};

struct SolveReport {
  std::optional<Fdds> solution;
  Failure failure = Failure::none;
  std::size_t iterations = 0;
  std::vector<Iteration> trace;
  explicit operator bool() const { return solution.has_value(); }
};

// Throws std::domain_error when P is not pseudo-injective.
SolveReport solve_pseudo_inj_fdds(const Polynomial& p, const Fdds& b,
                                  const SolveOptions& opt = {});

struct Witness {
  Fdds x, y;
  unsigned k = 1;
};

// X = sum alpha_I C_lcm(I), Y = sum beta_I C_lcm(I) over the subsets I of
// the cycle lengths of the non-constant coefficients.  Throws
// std::domain_error if a non-constant coefficient has a dendron, if there
// are more than max_lengths lengths, or if the pair fails to collide.
Witness noninjectivity_witness(const Polynomial& p, unsigned k = 1,
                               std::size_t max_lengths = 12);
// The pair built from a set of cycle lengths, unverified.
Witness witness_from_lengths(const std::vector<std::uint64_t>& lengths);
// (A_1 + ... + A_m) X^k.
Polynomial monomial_of(const Polynomial& p, unsigned k);

}  // namespace fdds::solver
