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

#include <map>

#include "fdds/perm.hpp"
#include "support.hpp"

using namespace fdds;
using namespace fdds::perm;
using namespace fdds::testing;

namespace {

std::vector<Fdds> column(const SolveResult& r, Fdds Step::*field) {
  std::vector<Fdds> out;
  for (const auto& s : r.trace) out.push_back(s.*field);
  return out;
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("classification") {
  auto s = classify_perm_poly(P("2: C2\n1: C4 + C6"));
  CHECK(s.g == 2);
  CHECK(s.pseudo_injective);
  CHECK_FALSE(s.injective);
  s = classify_perm_poly(P("1: C1 + C5"));
  CHECK(s.g == 1);
  CHECK(s.injective);
  s = classify_perm_poly(P("1: C2 + C3"));
  CHECK(s.g == 2);
  CHECK_FALSE(s.pseudo_injective);
  CHECK_THROWS_AS(classify_perm_poly(P("0: C2")), std::invalid_argument);
  CHECK_THROWS_AS(classify_perm_poly(P("1: C1[(())]")), std::invalid_argument);
}

TEST_CASE("k-th root greedy run") {
  const Fdds b = E("2*C2 + 12*C3 + 26*C6");
  auto r = kth_root_perm(b, 2);
  REQUIRE(r);
  CHECK(*r.solution == E("C2 + 2*C3 + C6"));
  CHECK(column(r, &Step::remainder) ==
        std::vector<Fdds>{b, E("12*C3 + 26*C6"), E("9*C3 + 24*C6"), E("22*C6")});
  CHECK(column(r, &Step::picked) == std::vector<Fdds>{E("C2"), E("C3"), E("C3"), E("C6")});
  CHECK(kth_root_perm(b, 1).solution == b);
  // Brute force: no X with at most 2 states squares to C2.
  for (const auto& x : permutations_upto(2)) CHECK(power(x, 2) != E("C2"));
  CHECK_FALSE(kth_root_perm(E("C2"), 2));
}

TEST_CASE("k-th root completeness") {
  for (const auto& x : permutations_upto(10)) {
    if (x.empty()) continue;
    for (unsigned k = 1; k <= 3; ++k) {
      auto r = kth_root_perm(power(x, k), k);
      REQUIRE(r);
      CHECK(*r.solution == x);
    }
  }
}

TEST_CASE("injective solver") {
  const Fdds b = E("C2 + 3*C5 + C7");
  CHECK(solve_injective_perm(P("1: C1"), b).solution == b);
  CHECK(solve_injective_perm(P("2: C1"), E("4*C1")).solution == E("2*C1"));
  CHECK(solve_injective_perm(P("1: C1\n0: C3"), E("C2 + C3")).solution == E("C2"));
  CHECK_THROWS_AS(solve_injective_perm(P("1: C2"), b), std::domain_error);
}

TEST_CASE("division by pseudo-cancelable divisors") {
  auto r = divide_pseudo_cancelable(E("C6 + C12"), E("C2 + C4"));
  REQUIRE(r);
  CHECK(*r.solution == E("C3"));
  CHECK(product_oracle(E("C2 + C4"), E("C3")) == E("C6 + C12"));
  CHECK_THROWS_AS(divide_pseudo_cancelable(E("5*C6"), E("C2 + C3")), std::domain_error);
  CHECK(product_oracle(E("C2 + C3"), E("C6")) == E("5*C6"));
  CHECK_THROWS_AS(divide_pseudo_cancelable(E("C6"), Fdds()), std::domain_error);
  for (const auto& a : permutations_upto(6)) {
    if (a.empty() || a.size() > 6) continue;
    bool pc = true;
    for (auto len : a.cycle_lengths()) pc = pc && len % a.min_cycle_len() == 0;
    if (!pc) continue;
    CHECK(divide_pseudo_cancelable(a, a).solution == E("C1"));
  }
}

TEST_CASE("division picks anti-lcm lengths and maximizes components") {
  const auto xs = permutations_upto(6);
  for (const auto& a : permutations_upto(4)) {
    if (a.empty()) continue;
    bool pc = true;
    for (auto len : a.cycle_lengths()) pc = pc && len % a.min_cycle_len() == 0;
    if (!pc) continue;
    std::map<std::vector<Fdds::Entry>, std::vector<Fdds>> sols;
    for (const auto& x : xs) {
      if (!x.empty()) sols[multiply(a, x).entries()].push_back(x);
    }
    for (const auto& [key, group] : sols) {
      const Fdds b = Fdds::from_entries(key);
      auto r = divide_pseudo_cancelable(b, a);
      REQUIRE(r);
      CHECK(multiply(a, *r.solution) == b);
      for (const auto& x : group) CHECK(r.solution->component_count() >= x.component_count());
      for (const auto& s : r.trace) {
        const auto want = nt::alcm(a.min_cycle_len(), s.remainder.min_cycle_len());
        CHECK(s.picked.first().cycle_len() == want.get_ui());
      }
    }
  }
}

TEST_CASE("pseudo-injective run") {
  const Polynomial p = P("2: C2\n1: C4 + C6");
  const Fdds b = E("16*C2 + 4*C4 + 18*C6 + C12");
  auto r = solve_pseudo_inj_perm(p, b);
  REQUIRE(r);
  CHECK(*r.solution == E("4*C1 + C3"));
  CHECK(column(r, &Step::remainder) ==
        std::vector<Fdds>{b, E("15*C2 + 3*C4 + 17*C6 + C12"), E("12*C2 + 2*C4 + 16*C6 + C12"),
                          E("7*C2 + C4 + 15*C6 + C12"), E("14*C6 + C12")});
  CHECK(column(r, &Step::picked) ==
        std::vector<Fdds>{E("C1"), E("C1"), E("C1"), E("C1"), E("C3")});
  CHECK(column(r, &Step::image_after).back() == b);
  CHECK(eval_poly(p, E("2*C2 + C3")) == b);
  CHECK(eval_poly(p, E("2*C1 + C2 + C3")) == b);
  CHECK(E("4*C1 + C3").component_count() > E("2*C1 + C2 + C3").component_count());
  auto none = solve_pseudo_inj_perm(P("1: C2"), E("C3"));
  CHECK_FALSE(none);
  CHECK(none.failure == Failure::length_mismatch);
  CHECK_THROWS_AS(solve_pseudo_inj_perm(P("1: C2 + C3"), E("5*C6")), std::domain_error);
}

TEST_CASE("pseudo-injective solver is sound and maximal") {
  const auto coeffs = permutations_upto(4);
  const auto xs = permutations_upto(6);
  const std::vector<Fdds> constants{Fdds(), E("C1"), E("C2")};
  std::size_t checked = 0;
  for (const auto& a0 : constants) {
    for (const auto& a1 : coeffs) {
      for (const auto& a2 : coeffs) {
        const Polynomial p(std::vector<Fdds>{a0, a1, a2});
        if (!p.has_nonconstant() || !classify_perm_poly(p).pseudo_injective) continue;
        std::map<std::vector<Fdds::Entry>, std::size_t> best;
        for (const auto& x : xs) {
          if (x.empty()) continue;
          auto& m = best[eval_poly(p, x).entries()];
          m = std::max<std::size_t>(m, x.component_count());
        }
        for (const auto& [key, most] : best) {
          const Fdds b = Fdds::from_entries(key);
          auto r = solve_pseudo_inj_perm(p, b);
          REQUIRE(r);
          CHECK(eval_poly(p, *r.solution) == b);
          CHECK(r.solution->component_count() >= most);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("compact product") {
  using BigNat = nt::BigNat;
  auto c = compact_multiply(CompactPerm::cycle(2), CompactPerm::cycle(3));
  CHECK(c == CompactPerm::cycle(6));
  const auto a = CompactPerm::from_entries({{2, 3}, {5, 1}});
  CHECK(compact_multiply(a, CompactPerm::cycle(1)) == a);
  const BigNat m = BigNat(1) << 20;
  auto big = compact_multiply(CompactPerm::cycle(m, 3), CompactPerm::cycle(3 * m, 1));
  CHECK(big == CompactPerm::cycle(3 * m, 3 * m));
  for (const auto& x : permutations_upto(5)) {
    for (const auto& y : permutations_upto(6)) {
      CHECK(compact_multiply(CompactPerm::encode(x), CompactPerm::encode(y)).decode() ==
            multiply(x, y));
      CHECK(compact_add(CompactPerm::encode(x), CompactPerm::encode(y)).decode() == add(x, y));
    }
  }
}

TEST_CASE("compact solver") {
  using BigNat = nt::BigNat;
  const Polynomial p = P("2: C2\n1: C4 + C6");
  auto r = solve_pseudo_inj_perm_compact(CompactPoly::encode(p),
                                         CompactPerm::encode(E("16*C2 + 4*C4 + 18*C6 + C12")));
  REQUIRE(r);
  CHECK(*r.solution == CompactPerm::encode(E("4*C1 + C3")));
  const auto b = CompactPerm::from_entries({{7, 5}, {BigNat(1) << 45, 3}});
  CHECK(solve_pseudo_inj_perm_compact(CompactPoly::encode(P("1: C1")), b).solution == b);

  const BigNat m = BigNat(1) << 20;
  CompactPoly q;
  q.coeffs = {CompactPerm(), CompactPerm::cycle(m)};
  const auto rhs = CompactPerm::cycle(3 * m, m);
  auto s = solve_pseudo_inj_perm_compact(q, rhs);
  REQUIRE(s);
  CHECK(*s.solution == CompactPerm::cycle(3, m));
  CHECK(compact_multiply(q.coeffs[1], *s.solution) == rhs);
}

TEST_CASE("compact and explicit solvers agree") {
  const auto coeffs = permutations_upto(3);
  const auto xs = permutations_upto(5);
  for (const auto& a1 : coeffs) {
    for (const auto& a2 : coeffs) {
      const Polynomial p(std::vector<Fdds>{Fdds(), a1, a2});
      if (!p.has_nonconstant() || !classify_perm_poly(p).pseudo_injective) continue;
      for (const auto& x : xs) {
        if (x.empty() || poly_size(p, x.size()) > 30) continue;
        const Fdds b = eval_poly(p, x);
        auto e = solve_pseudo_inj_perm(p, b);
        auto c = solve_pseudo_inj_perm_compact(CompactPoly::encode(p), CompactPerm::encode(b));
        REQUIRE(e);
        REQUIRE(c);
        CHECK(c.solution->decode() == *e.solution);
      }
    }
  }
}

}
