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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fdds/numtheory.hpp"

using namespace fdds::nt;

namespace {

// Smallest c with lcm(a, c) = b, by scanning.
std::uint64_t alcm_scan(std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t c = 1; c <= b; ++c) {
    if (b % c == 0 && std::lcm(a, c) == b) return c;
  }
  return 0;
}

// The squaring loop on machine words: rows of (res1, res2, pow or 0).
std::vector<std::array<std::uint64_t, 3>> loop_rows(std::uint64_t a, std::uint64_t b) {
  std::vector<std::array<std::uint64_t, 3>> rows;
  std::uint64_t r1 = b / a, r2 = 0;
  while (r1 != r2) {
    const unsigned __int128 sq = static_cast<unsigned __int128>(r1) * r1;
    rows.push_back({r1, r2, static_cast<std::uint64_t>(sq)});
    r2 = r1;
    r1 = static_cast<std::uint64_t>(std::gcd<unsigned __int128, unsigned __int128>(b, sq));
  }
  rows.push_back({r1, r2, 0});
  return rows;
}

std::vector<BigNat> nats(std::initializer_list<unsigned> v) {
  std::vector<BigNat> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("anti-lcm examples") {
  CHECK(alcm(3584, 43008) == 6144);
  CHECK(alcm_iter(3584, 43008) == 6144);
  CHECK(alcm(7, 7) == 1);
  CHECK(alcm(2, 4) == 4);
  CHECK(alcm(2, 6) == 3);
  CHECK(alcm(1, 1) == 1);
  CHECK_THROWS_AS(alcm(4, 6), std::domain_error);
  CHECK_THROWS_AS(alcm_iter(4, 6), std::domain_error);
}

TEST_CASE("anti-lcm loop trace") {
  std::vector<AlcmStep> t;
  alcm_iter(3584, 43008, &t);
  const auto want = loop_rows(3584, 43008);
  REQUIRE(t.size() == want.size());
  std::vector<unsigned long> res1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i].res1 == want[i][0]);
    CHECK(t[i].res2 == want[i][1]);
    CHECK(t[i].pow.has_value() == (i + 1 < t.size()));
    if (t[i].pow) CHECK(*t[i].pow == want[i][2]);
    res1.push_back(t[i].res1.get_ui());
  }
  CHECK(res1 == std::vector<unsigned long>{12, 48, 768, 6144, 6144});

  t.clear();
  CHECK(alcm_iter(9, 9, &t) == 1);
  CHECK(t.size() == 2);
}

TEST_CASE("anti-lcm sweep") {
  for (std::uint64_t b = 1; b <= 1500; ++b) {
    for (std::uint64_t a = 1; a <= b; ++a) {
      if (b % a) continue;
      const BigNat c = alcm(a, b);
      REQUIRE(c == alcm_scan(a, b));
      CHECK(alcm_iter(a, b) == c);
      CHECK(lcm(BigNat(a), c) == b);
    }
  }
}

TEST_CASE("anti-lcm divides every lcm partner") {
  for (std::uint64_t b = 1; b <= 400; ++b) {
    for (std::uint64_t a = 1; a <= b; ++a) {
      if (b % a) continue;
      const auto c0 = alcm(a, b).get_ui();
      for (std::uint64_t c = 1; c <= b; ++c) {
        if (std::lcm(a, c) == b) CHECK(c % c0 == 0);
      }
    }
  }
}

TEST_CASE("iteration count") {
  for (std::uint64_t b = 2; b <= 3000; b += 7) {
    for (std::uint64_t a = 1; a <= b; ++a) {
      if (b % a) continue;
      std::vector<AlcmStep> t;
      alcm_iter(a, b, &t);
      const double bound = std::ceil(std::log2(std::log2(static_cast<double>(b)))) + 2;
      CHECK(static_cast<double>(t.size() - 1) <= bound);
    }
  }
}

TEST_CASE("quotient shape") {
  CHECK(quotient_shape(2, 6, 6) == 2);
  CHECK(quotient_shape(5, 5, 1) == 1);
  CHECK_THROWS_AS(quotient_shape(2, 6, 4), std::domain_error);
  for (unsigned a = 1; a <= 60; ++a) {
    for (unsigned c = 1; c <= 60; ++c) {
      const BigNat b = lcm(BigNat(a), BigNat(c));
      const BigNat q = quotient_shape(a, b, c);
      CHECK(a % q == 0);
      CHECK(gcd(q, alcm(a, b)) == 1);
      CHECK(q * alcm(a, b) == c);
    }
  }
}

TEST_CASE("delta alpha beta") {
  const auto n = nats({2, 3, 6});
  CHECK(delta({}) == 1);
  const std::vector<std::vector<BigNat>> subsets{
      {}, nats({2}), nats({3}), nats({6}), nats({2, 3}), nats({2, 6}), nats({3, 6}), n};
  const unsigned beta_want[] = {252, 198, 204, 210, 222, 222, 222, 210};
  const unsigned delta_want[] = {1, 1, 1, 1, 1, 2, 3, 6};
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    CHECK(alpha(n, subsets[i]) == 216);
    CHECK(beta(n, subsets[i]) == beta_want[i]);
    CHECK(delta(subsets[i]) == delta_want[i]);
  }
  CHECK_THROWS_AS(delta(nats({1, 2})), std::domain_error);
  CHECK_THROWS_AS(alpha(n, nats({4})), std::domain_error);
}

TEST_CASE("delta does not depend on insertion order") {
  std::vector<unsigned> pool{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  const std::size_t m = pool.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        for (std::size_t l = k + 1; l <= m; ++l) {
          std::vector<BigNat> s{pool[i], pool[j], pool[k]};
          if (l < m) s.emplace_back(pool[l]);
          const BigNat want = delta(s);
          std::sort(s.begin(), s.end());
          do CHECK(delta_ordered(s) == want);
          while (std::next_permutation(s.begin(), s.end()));
        }
      }
    }
  }
}

TEST_CASE("exponent") {
  CHECK(alcm_exponent(1) == 1);
  CHECK(alcm_exponent(2) == 1);
  CHECK(alcm_exponent(3) == 2);
  CHECK(alcm_exponent(1024) == 10);
  CHECK(alcm_exponent(1025) == 11);
}

}
