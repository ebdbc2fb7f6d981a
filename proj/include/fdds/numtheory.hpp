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

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace fdds::nt {

using BigNat = mpz_class;

// Smallest c with lcm(a, c) = b.  Throws std::domain_error unless a | b.
BigNat alcm(const BigNat& a, const BigNat& b);

struct AlcmStep {
  BigNat res1, res2;
  std::optional<BigNat> pow;  // absent on the row that ends the loop
};

// Squaring fixpoint.  When trace is given it receives one row per test of
// the loop condition.
BigNat alcm_iter(const BigNat& a, const BigNat& b,
                 std::vector<AlcmStep>* trace = nullptr);

// c / alcm(a, b) for any c with lcm(a, c) = b.
BigNat quotient_shape(const BigNat& a, const BigNat& b, const BigNat& c);

// delta over the elements of j, inserted in the given order.
BigNat delta_ordered(const std::vector<BigNat>& j);
// delta with ascending insertion order.
BigNat delta(std::vector<BigNat> j);
BigNat alpha(const std::vector<BigNat>& n, const std::vector<BigNat>& i);
BigNat beta(const std::vector<BigNat>& n, const std::vector<BigNat>& i);
BigNat lcm_of(const std::vector<BigNat>& v);

// ceil(log2 b), floored at 1.
unsigned long alcm_exponent(const BigNat& b);

}  // namespace fdds::nt
