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

#include <set>

#include "fdds/oracle.hpp"
#include "support.hpp"

using namespace fdds;
using namespace fdds::oracle;
using namespace fdds::testing;

TEST_SUITE("oracle") {

TEST_CASE("catalog sizes") {
  const std::vector<std::size_t> want{1, 1, 3, 7, 19, 47, 130, 343, 951};
  for (unsigned n = 0; n <= 8; ++n) CHECK(by_composition(n).size() == want[n]);
  CHECK(rooted_trees(5).size() == 9);
  CHECK(connected(4).size() == 9);
}

TEST_CASE("composition and sweep agree") {
  for (unsigned n = 1; n <= 7; ++n) {
    auto a = by_composition(n);
    auto b = by_sweep(n);
    auto c = by_sweep_serial(n);
    std::set<Fdds, FddsLess> sa(a.begin(), a.end()), sb(b.begin(), b.end()),
        sc(c.begin(), c.end());
    CHECK(sa.size() == a.size());
    CHECK(sa == sb);
    CHECK(sa == sc);
    for (const auto& v : a) CHECK(v.size() == n);
  }
}

TEST_CASE("index") {
  const auto idx = enumerate_fdds(6);
  CHECK(idx.max_states == 6);
  CHECK(idx.of_size(0).size() == 1);
  CHECK(idx.total() == 1 + 1 + 3 + 7 + 19 + 47 + 130);
  CHECK_THROWS_AS(enumerate_fdds(11), std::length_error);
}

TEST_CASE("brute-force solutions") {
  auto s = oracle_solve(P("2: C2\n1: C4 + C6"), E("16*C2 + 4*C4 + 18*C6 + C12"), 12);
  {
    std::set<Fdds, FddsLess> got(s.begin(), s.end());
    std::set<Fdds, FddsLess> want{E("4*C1 + C3"), E("2*C2 + C3"), E("2*C1 + C2 + C3")};
    CHECK(s.size() == 3);
    CHECK(got == want);
  }

  const Fdds b = E("C1[(()())] + C2");
  s = oracle_solve(P("1: C1"), b, 6);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == b);

  s = oracle_solve(P("1: C2 + C3"), E("5*C6"), 8);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == E("C6"));

  s = oracle_solve(P("1: C2"), E("6*C2"), 6);
  std::set<Fdds, FddsLess> got(s.begin(), s.end());
  CHECK(got.count(E("2*C1 + 2*C2")) == 1);
  CHECK(got.count(E("4*C1 + C2")) == 1);
  CHECK(got.count(E("3*C2")) == 1);
  for (const auto& x : s) CHECK(multiply(E("C2"), x) == E("6*C2"));

  CHECK(oracle_solve(P("1: C2"), E("C3"), 6).empty());
}

TEST_CASE("parallel and serial searches agree") {
  const auto idx = enumerate_fdds(7);
  const Polynomial p = P("1: C2\n0: C1");
  for (const auto& x : values_upto(4)) {
    const Fdds b = eval_poly(p, x);
    auto a = oracle_solve(p, b, idx);
    auto c = oracle_solve_serial(p, b, idx);
    std::set<Fdds, FddsLess> sa(a.begin(), a.end()), sc(c.begin(), c.end());
    CHECK(sa == sc);
    CHECK(sa.count(x) == 1);
  }
}

}
