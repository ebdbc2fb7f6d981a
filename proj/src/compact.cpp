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

#include <algorithm>
#include <stdexcept>

#include "fdds/perm.hpp"

namespace fdds::perm {

using nt::BigNat;

namespace {

BigNat big_gcd(const BigNat& a, const BigNat& b) {
  BigNat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Explicit graphs beyond this many states are refused by decode().
constexpr unsigned long kDecodeLimit = 1ul << 24;

}  // namespace

CompactPerm CompactPerm::from_entries(std::vector<Entry> e) {
  for (const auto& x : e) {
    if (x.len <= 0 || x.mult < 0) {
      throw std::invalid_argument("compact entry needs len >= 1, mult >= 0");
    }
  }
  std::sort(e.begin(), e.end(),
            [](const Entry& a, const Entry& b) { return a.len < b.len; });
  CompactPerm out;
  for (auto& x : e) {
    if (x.mult == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().len == x.len) {
      out.entries_.back().mult += x.mult;
    } else {
      out.entries_.push_back(std::move(x));
    }
  }
  return out;
}

CompactPerm CompactPerm::encode(const Fdds& a) {
  if (!a.is_permutation()) throw std::invalid_argument("not a permutation");
  std::vector<Entry> e;
  for (const auto& [c, m] : a.entries()) {
    e.push_back({BigNat(c.cycle_len()), BigNat(m)});
  }
  return from_entries(std::move(e));
}

Fdds CompactPerm::decode() const {
  if (size() > kDecodeLimit) throw std::domain_error("too large to decode");
  std::vector<Fdds::Entry> e;
  for (const auto& x : entries_) {
    e.emplace_back(Component::cycle(x.len.get_ui()), x.mult.get_ui());
  }
  return Fdds::from_entries(std::move(e));
}

BigNat CompactPerm::size() const {
  BigNat s = 0;
  for (const auto& x : entries_) s += x.len * x.mult;
  return s;
}

BigNat CompactPerm::mult_of(const BigNat& len) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), len,
      [](const Entry& e, const BigNat& l) { return e.len < l; });
  return it != entries_.end() && it->len == len ? it->mult : BigNat(0);
}

CompactPoly CompactPoly::encode(const Polynomial& p) {
  CompactPoly out;
  for (const auto& c : p.coeffs) out.coeffs.push_back(CompactPerm::encode(c));
  return out;
}

CompactPerm compact_add(const CompactPerm& a, const CompactPerm& b) {
  auto e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return CompactPerm::from_entries(std::move(e));
}

CompactPerm compact_multiply(const CompactPerm& a, const CompactPerm& b) {
  std::vector<CompactPerm::Entry> e;
  e.reserve(a.entries().size() * b.entries().size());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      BigNat g = big_gcd(x.len, y.len);
      e.push_back({x.len / g * y.len, g * x.mult * y.mult});
    }
  }
  return CompactPerm::from_entries(std::move(e));
}

CompactPerm compact_power(const CompactPerm& a, unsigned k) {
  CompactPerm r = CompactPerm::cycle(1);
  for (unsigned i = 0; i < k; ++i) r = compact_multiply(r, a);
  return r;
}

std::optional<CompactPerm> compact_subtract(const CompactPerm& a,
                                            const CompactPerm& b) {
  std::vector<CompactPerm::Entry> out;
  auto ia = a.entries().begin(), ea = a.entries().end();
  for (const auto& y : b.entries()) {
    while (ia != ea && ia->len < y.len) out.push_back(*ia++);
    if (ia == ea || ia->len != y.len || ia->mult < y.mult) return std::nullopt;
    out.push_back({y.len, ia->mult - y.mult});
    ++ia;
  }
  out.insert(out.end(), ia, ea);
  return CompactPerm::from_entries(std::move(out));
}

bool compact_submultiset(const CompactPerm& a, const CompactPerm& b) {
  return compact_subtract(b, a).has_value();
}

BigNat compact_poly_size(const CompactPoly& p, const BigNat& x_size) {
  BigNat total = 0, xp = 1;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) xp *= x_size;
    total += p.coeffs[i].size() * xp;
  }
  return total;
}

CompactPerm compact_eval(const CompactPoly& p, const CompactPerm& x) {
  CompactPerm acc, xp = CompactPerm::cycle(1);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) xp = compact_multiply(xp, x);
    if (!p.coeffs[i].empty()) {
      acc = compact_add(acc, compact_multiply(p.coeffs[i], xp));
    }
  }
  return acc;
}

std::optional<CompactPerm> compact_eval(const CompactPoly& p,
                                        const CompactPerm& x,
                                        const BigNat& budget) {
  if (compact_poly_size(p, x.size()) > budget) return std::nullopt;
  return compact_eval(p, x);
}

Seed classify_compact(const CompactPoly& p) {
  BigNat g = 0;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    if (!p.coeffs[i].empty() && (g == 0 || p.coeffs[i].front().len < g)) {
      g = p.coeffs[i].front().len;
    }
  }
  if (g == 0) throw std::invalid_argument("polynomial has no non-constant coefficient");
  Seed s;
  s.pseudo_injective = true;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    for (const auto& e : p.coeffs[i].entries()) {
      if (!mpz_divisible_p(e.len.get_mpz_t(), g.get_mpz_t())) {
        s.pseudo_injective = false;
      }
    }
  }
  s.injective = g == 1;
  // The seed itself may exceed a machine word; callers needing it read the
  // coefficients directly.
  s.g = g.fits_ulong_p() ? g.get_ui() : 0;
  return s;
}

CompactResult solve_pseudo_inj_perm_compact(const CompactPoly& p,
                                            const CompactPerm& b) {
  Seed s = classify_compact(p);
  if (!s.pseudo_injective) {
    throw std::domain_error("polynomial is not pseudo-injective");
  }
  BigNat g = 0;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    if (!p.coeffs[i].empty() && (g == 0 || p.coeffs[i].front().len < g)) {
      g = p.coeffs[i].front().len;
    }
  }
  CompactResult r;
  auto give_up = [&](Failure f) {
    r.solution.reset();
    r.failure = f;
    return r;
  };
  CompactPoly q = p;
  if (!q.coeffs.empty()) q.coeffs[0] = CompactPerm();
  auto rhs = p.coeffs.empty() ? std::optional<CompactPerm>(b)
                              : compact_subtract(b, p.coeffs[0]);
  if (!rhs) return give_up(Failure::not_submultiset);
  const BigNat budget = rhs->size();

  CompactPerm x;
  auto px = compact_eval(q, x, budget);
  while (true) {
    if (!px) return give_up(Failure::size_overflow);
    auto rem = compact_subtract(*rhs, *px);
    if (!rem) return give_up(Failure::not_submultiset);
    if (rem->empty()) {
      r.solution = x;
      return r;
    }
    const BigNat lambda = rem->front().len;
    const BigNat want = rem->front().mult;
    if (!mpz_divisible_p(lambda.get_mpz_t(), g.get_mpz_t())) {
      return give_up(Failure::length_mismatch);
    }
    const BigNat c = nt::alcm(g, lambda);
    const BigNat base = px->mult_of(lambda);

    // Copies of C_lambda contributed by q copies of C_c, or nullopt when
    // the image would outgrow the right-hand side.
    auto gained = [&](const BigNat& copies) -> std::optional<BigNat> {
      ++r.probes;
      auto img = compact_eval(q, compact_add(x, CompactPerm::cycle(c, copies)),
                              budget);
      if (!img) return std::nullopt;
      return img->mult_of(lambda) - base;
    };
    auto r1 = gained(1);
    if (!r1) return give_up(Failure::size_overflow);
    if (*r1 == 0) return give_up(Failure::non_integral);
    // The gain is a polynomial in the copy count with non-negative
    // coefficients, so gain(q) >= q * gain(1).
    BigNat lo = 1, hi = want / *r1, found = 0;
    while (lo <= hi) {
      BigNat mid = (lo + hi) / 2;
      auto got = gained(mid);
      if (!got || *got > want) {
        hi = mid - 1;
      } else if (*got < want) {
        lo = mid + 1;
      } else {
        found = mid;
        break;
      }
    }
    if (found == 0) return give_up(Failure::non_integral);
    r.picks.push_back({c, found});
    x = compact_add(x, CompactPerm::cycle(c, found));
    px = compact_eval(q, x, budget);
  }
}

}  // namespace fdds::perm
