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

#include "fdds/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdds::nt {

namespace {

void require_divides(const BigNat& a, const BigNat& b) {
  if (a <= 0 || b <= 0) throw std::domain_error("alcm: arguments must be positive");
  if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    throw std::domain_error("alcm: " + a.get_str() + " does not divide " +
                            b.get_str());
  }
}

BigNat gcd(const BigNat& a, const BigNat& b) {
  BigNat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigNat lcm(const BigNat& a, const BigNat& b) {
  BigNat r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void require_set(const std::vector<BigNat>& v) {
  for (const auto& x : v) {
    if (x <= 1) throw std::domain_error("element " + x.get_str() + " is not > 1");
  }
}

// Every element of i must occur in n.
void require_subset(const std::vector<BigNat>& n, const std::vector<BigNat>& i) {
  for (const auto& x : i) {
    if (std::find(n.begin(), n.end(), x) == n.end()) {
      throw std::domain_error("element " + x.get_str() + " is not in N");
    }
  }
}

}  // namespace

unsigned long alcm_exponent(const BigNat& b) {
  std::size_t bits = mpz_sizeinbase(b.get_mpz_t(), 2);
  unsigned long k = mpz_popcount(b.get_mpz_t()) == 1 ? bits - 1 : bits;
  return std::max(1ul, k);
}

BigNat alcm(const BigNat& a, const BigNat& b) {
  require_divides(a, b);
  BigNat q = b / a, r;
  mpz_powm_ui(r.get_mpz_t(), q.get_mpz_t(), alcm_exponent(b), b.get_mpz_t());
  return gcd(r, b);
}

BigNat alcm_iter(const BigNat& a, const BigNat& b,
                 std::vector<AlcmStep>* trace) {
  require_divides(a, b);
  BigNat res1 = b / a;
  BigNat res2 = 0;
  while (true) {
    if (res1 == res2) {
      if (trace) trace->push_back({res1, res2, std::nullopt});
      return res1;
    }
    BigNat pow = res1 * res1;
    if (trace) trace->push_back({res1, res2, pow});
    res2 = res1;
    res1 = gcd(b, pow);
  }
}

BigNat quotient_shape(const BigNat& a, const BigNat& b, const BigNat& c) {
  if (a <= 0 || c <= 0 || lcm(a, c) != b) {
    throw std::domain_error("quotient_shape: lcm(a, c) != b");
  }
  return c / alcm(a, b);
}

BigNat lcm_of(const std::vector<BigNat>& v) {
  BigNat r = 1;
  for (const auto& x : v) r = lcm(r, x);
  return r;
}

BigNat delta_ordered(const std::vector<BigNat>& j) {
  require_set(j);
  BigNat d = 1, l = 1;
  for (const auto& a : j) {
    d *= gcd(a, l);
    l = lcm(l, a);
  }
  return d;
}

BigNat delta(std::vector<BigNat> j) {
  std::sort(j.begin(), j.end());
  return delta_ordered(j);
}

BigNat alpha(const std::vector<BigNat>& n, const std::vector<BigNat>& i) {
  require_set(n);
  require_subset(n, i);
  BigNat prod = 1;
  for (const auto& a : n) prod *= a;
  return delta(n) * prod;
}

BigNat beta(const std::vector<BigNat>& n, const std::vector<BigNat>& i) {
  BigNat rest = 1;
  for (const auto& a : n) {
    if (std::find(i.begin(), i.end(), a) == i.end()) rest *= a;
  }
  BigNat term = delta(i) * rest;
  BigNat a = alpha(n, i);
  if (i.size() % 2 == 0) return a + term;
  return a - term;
}

}  // namespace fdds::nt
