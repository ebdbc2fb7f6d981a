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

#include "fdds/perm.hpp"

#include <stdexcept>

namespace fdds::perm {

namespace {

std::uint64_t alcm64(std::uint64_t a, std::uint64_t b) {
  return nt::alcm(nt::BigNat(a), nt::BigNat(b)).get_ui();
}

void require_permutation(const Fdds& a, const char* what) {
  if (!a.is_permutation()) {
    throw std::invalid_argument(std::string(what) + " is not a permutation");
  }
}

SolveResult fail(SolveResult r, Failure f) {
  r.solution.reset();
  r.failure = f;
  return r;
}

}  // namespace

const char* to_string(Failure f) {
  switch (f) {
    case Failure::none: return "none";
    case Failure::size_overflow: return "size overflow";
    case Failure::not_submultiset: return "not a submultiset";
    case Failure::non_integral: return "non-integral multiplicity";
    case Failure::length_mismatch: return "cycle length not a multiple of the seed";
    case Failure::unroll: return "no solution over unroll cuts";
    case Failure::period: return "unroll tree without a usable period";
  }
  return "?";
}

Seed classify_perm_poly(const Polynomial& p) {
  if (!p.has_nonconstant()) {
    throw std::invalid_argument("polynomial has no non-constant coefficient");
  }
  for (const auto& c : p.coeffs) require_permutation(c, "coefficient");
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

SolveResult kth_root_perm(const Fdds& b, unsigned k) {
  if (k == 0) throw std::invalid_argument("root degree must be positive");
  require_permutation(b, "right-hand side");
  SolveResult r;
  Fdds x;
  while (true) {
    Fdds xk = power(x, k);
    if (xk.size() > b.size()) return fail(std::move(r), Failure::size_overflow);
    auto rem = subtract(b, xk);
    if (!rem) return fail(std::move(r), Failure::not_submultiset);
    if (rem->empty()) {
      r.solution = x;
      return r;
    }
    Fdds pick(rem->first());
    Fdds next = add(x, pick);
    r.trace.push_back({*rem, x, pick, Fdds(), xk});
    x = std::move(next);
  }
}

namespace {

// The shared greedy loop of the injective and pseudo-injective solvers;
// `choose` maps the current remainder to the component to append.
template <typename Choose>
SolveResult greedy_poly(const Polynomial& p, const Fdds& b, Choose choose) {
  SolveResult r;
  auto rhs = subtract(b, p.constant());
  if (!rhs) return fail(std::move(r), Failure::not_submultiset);
  const Polynomial q = p.without_constant();
  const Count budget = rhs->size();
  Fdds x;
  std::optional<Fdds> px = eval_poly(q, x, budget);
  while (true) {
    if (!px) return fail(std::move(r), Failure::size_overflow);
    auto rem = subtract(*rhs, *px);
    if (!rem) return fail(std::move(r), Failure::not_submultiset);
    if (rem->empty()) {
      r.solution = x;
      return r;
    }
    std::optional<Fdds> pick = choose(*rem);
    if (!pick) return fail(std::move(r), Failure::length_mismatch);
    Fdds next = add(x, *pick);
    auto pnext = eval_poly(q, next, budget);
    r.trace.push_back({*rem, x, *pick, pnext.value_or(Fdds()), *px});
    x = std::move(next);
    px = std::move(pnext);
  }
}

}  // namespace

SolveResult solve_injective_perm(const Polynomial& p, const Fdds& b) {
  require_permutation(b, "right-hand side");
  if (!classify_perm_poly(p).injective) {
    throw std::domain_error("polynomial is not injective");
  }
  return greedy_poly(p, b, [](const Fdds& rem) -> std::optional<Fdds> {
    return Fdds(rem.first());
  });
}

SolveResult solve_pseudo_inj_perm(const Polynomial& p, const Fdds& b) {
  require_permutation(b, "right-hand side");
  const Seed s = classify_perm_poly(p);
  if (!s.pseudo_injective) {
    throw std::domain_error("polynomial is not pseudo-injective");
  }
  return greedy_poly(p, b, [&](const Fdds& rem) -> std::optional<Fdds> {
    const auto lambda = rem.min_cycle_len();
    if (lambda % s.g) return std::nullopt;
    return Fdds::cycle(alcm64(s.g, lambda));
  });
}

SolveResult divide_pseudo_cancelable(const Fdds& b, const Fdds& a) {
  require_permutation(a, "divisor");
  require_permutation(b, "dividend");
  if (a.empty()) throw std::domain_error("division by the empty permutation");
  const auto la = a.min_cycle_len();
  for (auto len : a.cycle_lengths()) {
    if (len % la) throw std::domain_error("divisor is not pseudo-cancelable");
  }
  SolveResult r;
  Fdds x;
  Fdds rem = b;
  while (!rem.empty()) {
    if (a.size() > rem.size()) return fail(std::move(r), Failure::size_overflow);
    const auto lambda = rem.min_cycle_len();
    if (lambda % la) return fail(std::move(r), Failure::length_mismatch);
    const Fdds cyc = Fdds::cycle(alcm64(la, lambda));
    const Fdds ac = multiply(a, cyc);
    const Component target = Component::cycle(lambda);
    const Count ma = ac.multiplicity(target), mb = rem.multiplicity(target);
    if (ma == 0 || mb % ma) return fail(std::move(r), Failure::non_integral);
    const Count q = mb / ma;
    auto next = subtract(rem, scale(ac, q));
    if (!next) return fail(std::move(r), Failure::not_submultiset);
    Fdds pick = scale(cyc, q);
    r.trace.push_back({rem, x, pick, Fdds(), Fdds()});
    x = add(x, pick);
    rem = std::move(*next);
  }
  r.solution = x;
  return r;
}

}  // namespace fdds::perm
