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

#include "fdds/solver.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fdds/deep_stack.hpp"
#include "fdds/numtheory.hpp"
#include "fdds/unroll.hpp"

namespace fdds::solver {

using unroll::Forest;
using unroll::NodeId;
using unroll::TreeArena;

Seed classify_fdds_poly(const Polynomial& p) {
  if (!p.has_nonconstant()) {
    throw std::invalid_argument("polynomial has no non-constant coefficient");
  }
  Seed s;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    for (auto len : p.coeffs[i].cycle_lengths()) {
      if (s.g == 0 || len < s.g) s.g = len;
    }
  }
  s.pseudo_injective = true;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    for (auto len : p.coeffs[i].cycle_lengths()) {
      if (len % s.g) s.pseudo_injective = false;
    }
  }
  s.injective = s.g == 1;
  return s;
}

std::strong_ordering compare_ct(const Component& a, const Component& b) {
  if (auto c = a.cycle_len() <=> b.cycle_len(); c != 0) return c;
  if (a == b) return std::strong_ordering::equal;
  const auto n = static_cast<std::uint32_t>(a.cycle_len() + b.cycle_len() +
                                            std::max(a.depth(), b.depth()));
  const int s = detail::with_deep_stack([&] {
    TreeArena ar;
    return ar.compare(unroll::min_unroll_tree(ar, a, n),
                      unroll::min_unroll_tree(ar, b, n));
  });
  if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a <=> b;
}

Component min_component_ct(const Fdds& x) {
  const Component* best = nullptr;
  for (const auto& [c, m] : x.entries()) {
    if (c.cycle_len() != x.min_cycle_len()) break;
    if (!best || compare_ct(c, *best) < 0) best = &c;
  }
  if (!best) throw std::invalid_argument("min_component_ct: empty value");
  return *best;
}

std::strong_ordering compare_lep(const Polynomial& p, const Component& x,
                                 const Component& y) {
  const Component mx = min_component_ct(eval_poly(p, Fdds(x)));
  const Component my = min_component_ct(eval_poly(p, Fdds(y)));
  if (auto c = compare_ct(mx, my); c != 0) return c;
  return compare_ct(x, y);
}

namespace {

SolveReport solve_impl(const Polynomial& p, const Fdds& b,
                       const SolveOptions& opt) {
  const Seed seed = classify_fdds_poly(p);
  if (!seed.pseudo_injective) {
    throw std::domain_error("polynomial is not pseudo-injective");
  }
  SolveReport rep;
  auto give_up = [&](Failure f) {
    rep.solution.reset();
    rep.failure = f;
    return rep;
  };
  auto rhs = subtract(b, p.constant());
  if (!rhs) return give_up(Failure::not_submultiset);
  const Polynomial q = p.without_constant();
  const Count budget = rhs->size();

  struct Restricted {
    std::uint32_t depth;
    Forest solution;
  };
  std::map<std::uint64_t, Restricted> by_len;
  TreeArena ar;
  Fdds x;
  while (true) {
    auto px = eval_poly(q, x, budget);
    if (!px) return give_up(Failure::size_overflow);
    auto rem = subtract(*rhs, *px);
    if (!rem) return give_up(Failure::not_submultiset);
    if (rem->empty()) {
      rep.solution = x;
      return rep;
    }
    const std::uint64_t lambda = rem->min_cycle_len();
    if (lambda % seed.g) return give_up(Failure::length_mismatch);

    auto it = by_len.find(lambda);
    if (it == by_len.end()) {
      const Fdds target = comps_len_div(*rhs, lambda);
      const std::uint64_t n64 = unroll::sufficient_depth(target) + opt.depth_extra;
      if (n64 > std::numeric_limits<std::uint32_t>::max() / 2) {
        return give_up(Failure::size_overflow);
      }
      const auto n = static_cast<std::uint32_t>(n64);
      std::vector<Forest> fp(q.coeffs.size());
      for (std::size_t i = 1; i < q.coeffs.size(); ++i) {
        fp[i] = unroll::unroll_cut(ar, comps_len_div(q.coeffs[i], lambda), n);
      }
      auto f = unroll::solve_forest_poly(ar, fp, unroll::unroll_cut(ar, target, n));
      if (!f) return give_up(Failure::unroll);
      it = by_len.emplace(lambda, Restricted{n, std::move(*f)}).first;
    }
    const auto n = it->second.depth;
    auto fresh = unroll::forest_subtract(
        it->second.solution, unroll::unroll_cut(ar, comps_len_div(x, lambda), n));
    if (!fresh || fresh->empty()) return give_up(Failure::unroll);
    const NodeId t = unroll::forest_min(ar, *fresh);
    std::uint64_t period;
    try {
      period = unroll::min_period(ar, t);
    } catch (const std::domain_error&) {
      return give_up(Failure::period);
    }
    const std::uint64_t a =
        nt::alcm(nt::BigNat(seed.g), nt::BigNat(lambda)).get_ui();
    const std::uint64_t len = std::lcm(period, a);
    Component d = unroll::reconstruct_component(ar, t, len);
    rep.trace.push_back({*rem, d, lambda, period, n});
    ++rep.iterations;
    x = add(x, Fdds(std::move(d)));
  }
}

}  // namespace

SolveReport solve_pseudo_inj_fdds(const Polynomial& p, const Fdds& b,
                                  const SolveOptions& opt) {
  return detail::with_deep_stack([&] { return solve_impl(p, b, opt); });
}

Polynomial monomial_of(const Polynomial& p, unsigned k) {
  Fdds sum;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) sum = add(sum, p.coeffs[i]);
  std::vector<Fdds> c(k + 1);
  c[k] = sum;
  return Polynomial(std::move(c));
}

Witness witness_from_lengths(const std::vector<std::uint64_t>& lengths) {
  std::vector<nt::BigNat> n;
  for (auto v : lengths) n.emplace_back(v);
  std::vector<Fdds::Entry> xs, ys;
  const std::size_t m = n.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<nt::BigNat> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) subset.push_back(n[i]);
    }
    const auto len = nt::lcm_of(subset);
    const auto a = nt::alpha(n, subset), b = nt::beta(n, subset);
    if (!len.fits_ulong_p() || !a.fits_ulong_p() || !b.fits_ulong_p()) {
      throw std::domain_error("witness does not fit machine integers");
    }
    xs.emplace_back(Component::cycle(len.get_ui()), a.get_ui());
    ys.emplace_back(Component::cycle(len.get_ui()), b.get_ui());
  }
  return {Fdds::from_entries(std::move(xs)), Fdds::from_entries(std::move(ys)), 1};
}

Witness noninjectivity_witness(const Polynomial& p, unsigned k,
                               std::size_t max_lengths) {
  if (!p.has_nonconstant()) {
    throw std::invalid_argument("polynomial has no non-constant coefficient");
  }
  if (k == 0) throw std::invalid_argument("witness exponent must be positive");
  const Polynomial mono = monomial_of(p, k);
  const auto lengths = mono.coeffs[k].cycle_lengths();
  if (!lengths.empty() && lengths.front() == 1) {
    throw std::domain_error("a non-constant coefficient contains a dendron");
  }
  if (lengths.size() > max_lengths) {
    throw std::domain_error("too many distinct cycle lengths (" +
                            std::to_string(lengths.size()) + ")");
  }
  Witness w = witness_from_lengths(lengths);
  w.k = k;
  if (w.x == w.y || eval_poly(p, w.x) != eval_poly(p, w.y) ||
      eval_poly(mono, w.x) != eval_poly(mono, w.y)) {
    throw std::logic_error("witness failed verification");
  }
  return w;
}

}  // namespace fdds::solver
