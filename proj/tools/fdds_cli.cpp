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

// fdds: arithmetic and equation solving over finite discrete dynamical
// systems.  Exit status 0 = solved/true, 1 = no solution, 2 = bad input or
// unsupported polynomial.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "fdds/io.hpp"
#include "fdds/numtheory.hpp"
#include "fdds/oracle.hpp"
#include "fdds/perm.hpp"
#include "fdds/solver.hpp"
#include "fdds/unroll.hpp"

namespace {

using namespace fdds;

enum class Format { table, expr, compact };

constexpr int kSolved = 0;
constexpr int kNoSolution = 1;
constexpr int kBadInput = 2;

// "@path", an existing file, or the literal text.
std::string slurp(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return io::read_file(arg.substr(1));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return io::read_file(arg);
  return arg;
}

Fdds value_of(const std::string& arg, Format f) {
  const std::string text = slurp(arg);
  switch (f) {
    case Format::table: return io::parse_table(text);
    case Format::compact: return io::parse_compact(text).decode();
    case Format::expr: break;
  }
  return io::parse_expr(text);
}

io::Loader loader() {
  return [](const std::string& path) { return io::read_file(path); };
}

Polynomial poly_of(const std::string& arg) {
  return io::parse_poly(slurp(arg), loader());
}

std::string show(const Fdds& a, Format f) {
  switch (f) {
    case Format::table: return io::format_table(a);
    case Format::compact:
      if (a.is_permutation()) return io::format_compact(perm::CompactPerm::encode(a));
      break;
    case Format::expr: break;
  }
  return io::format_expr(a) + "\n";
}

// Plain aligned columns.
void print_rows(const std::vector<std::string>& head,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t j = 0; j < head.size(); ++j) w[j] = head[j].size();
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t j = 0; j < r.size(); ++j) {
      s += r[j];
      if (j + 1 < r.size()) s += std::string(w[j] - r[j].size() + 2, ' ') + "| ";
    }
    std::cout << s << "\n";
  };
  line(head);
  std::string rule;
  for (std::size_t j = 0; j < w.size(); ++j) rule += std::string(w[j] + (j + 1 < w.size() ? 4 : 0), '-');
  std::cout << rule << "\n";
  for (const auto& r : rows) line(r);
}

std::string e(const Fdds& a) { return io::format_expr(a); }

int report(const std::optional<Fdds>& x, const char* why, Format f) {
  if (!x) {
    std::cerr << "no solution (" << why << ")\n";
    return kNoSolution;
  }
  std::cout << show(*x, f);
  return kSolved;
}

void trace_root(const perm::SolveResult& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : r.trace) rows.push_back({e(s.remainder), e(add(s.x, s.picked))});
  print_rows({"B - X^k", "X"}, rows);
}

void trace_poly(const perm::SolveResult& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : r.trace) {
    rows.push_back({e(s.remainder), e(s.x), e(s.picked), e(s.image_after), e(s.image_before)});
  }
  if (r.solution) rows.push_back({"0", e(*r.solution), "", "", ""});
  print_rows({"B", "Y", "D", "P(Y+D)", "P(Y)"}, rows);
}

void trace_general(const solver::SolveReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : r.trace) {
    rows.push_back({e(s.remainder), std::to_string(s.lambda), std::to_string(s.depth),
                    std::to_string(s.period), e(Fdds(s.picked))});
  }
  print_rows({"B - P(X)", "lambda", "depth", "period", "D"}, rows);
}

bool all_permutations(const Polynomial& p, const Fdds& b) {
  if (!b.is_permutation()) return false;
  return std::all_of(p.coeffs.begin(), p.coeffs.end(),
                     [](const Fdds& c) { return c.is_permutation(); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic and polynomial equations over finite dynamical systems"};
  app.require_subcommand(1);
  Format fmt = Format::expr;
  const std::map<std::string, Format> formats{
      {"table", Format::table}, {"expr", Format::expr}, {"compact", Format::compact}};
  app.add_option("--format", fmt, "value format: table, expr or compact")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string a1, a2;
  unsigned k = 1, depth = 0, max_states = 8;
  bool trace = false, compact = false;

  auto* product = app.add_subcommand("product", "print A B");
  product->add_option("A", a1)->required();
  product->add_option("B", a2)->required();

  auto* pow = app.add_subcommand("pow", "print A^k");
  pow->add_option("A", a1)->required();
  pow->add_option("k", k)->required();

  auto* root = app.add_subcommand("root", "solve X^k = B");
  root->add_option("B", a1)->required();
  root->add_option("k", k)->required()->check(CLI::PositiveNumber);
  root->add_flag("--trace", trace);

  auto* divide = app.add_subcommand("divide", "solve A X = B");
  divide->add_option("B", a1)->required();
  divide->add_option("A", a2)->required();
  divide->add_flag("--trace", trace);

  auto* solve = app.add_subcommand("solve", "solve P(X) = B");
  solve->add_option("P", a1, "polynomial: lines '<degree>: <value>'")->required();
  solve->add_option("B", a2)->required();
  solve->add_flag("--compact", compact, "arbitrary-precision permutation solver");
  solve->add_flag("--trace", trace);

  auto* unr = app.add_subcommand("unroll", "depth-d cuts of the unroll of A");
  unr->add_option("A", a1)->required();
  unr->add_option("--depth", depth)->required();

  auto* classify = app.add_subcommand("classify", "seed and injectivity class of P");
  classify->add_option("P", a1)->required();

  auto* witness = app.add_subcommand("witness", "X != Y with P(X) = P(Y)");
  witness->add_option("P", a1)->required();
  witness->add_option("-k", k, "also check (A_1 + ... + A_m) X^k")->check(CLI::PositiveNumber);

  auto* orc = app.add_subcommand("oracle", "all X up to a size with P(X) = B");
  orc->add_option("P", a1)->required();
  orc->add_option("B", a2)->required();
  orc->add_option("--max-states", max_states)->check(CLI::Range(1, 12));

  auto* alcm = app.add_subcommand("alcm", "smallest c with lcm(a, c) = b");
  alcm->add_option("a", a1)->required();
  alcm->add_option("b", a2)->required();
  alcm->add_flag("--trace", trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*product) {
      std::cout << show(multiply(value_of(a1, fmt), value_of(a2, fmt)), fmt);
      return kSolved;
    }
    if (*pow) {
      std::cout << show(power(value_of(a1, fmt), k), fmt);
      return kSolved;
    }
    if (*root) {
      const Fdds b = value_of(a1, fmt);
      if (b.is_permutation()) {
        auto r = perm::kth_root_perm(b, k);
        if (trace) trace_root(r);
        return report(r.solution, perm::to_string(r.failure), fmt);
      }
      std::vector<Fdds> c(k + 1);
      c[k] = Fdds::cycle(1);
      auto r = solver::solve_pseudo_inj_fdds(Polynomial(std::move(c)), b);
      if (trace) trace_general(r);
      return report(r.solution, perm::to_string(r.failure), fmt);
    }
    if (*divide) {
      const Fdds b = value_of(a1, fmt), a = value_of(a2, fmt);
      if (b.is_permutation() && a.is_permutation()) {
        auto r = perm::divide_pseudo_cancelable(b, a);
        if (trace) trace_poly(r);
        return report(r.solution, perm::to_string(r.failure), fmt);
      }
      auto r = solver::solve_pseudo_inj_fdds(Polynomial({Fdds(), a}), b);
      if (trace) trace_general(r);
      return report(r.solution, perm::to_string(r.failure), fmt);
    }
    if (*solve) {
      if (compact) {
        auto p = io::parse_compact_poly(slurp(a1), loader());
        auto b = io::parse_compact(slurp(a2));
        auto r = perm::solve_pseudo_inj_perm_compact(p, b);
        if (trace) {
          std::vector<std::vector<std::string>> rows;
          for (const auto& pk : r.picks) rows.push_back({pk.len.get_str(), pk.copies.get_str()});
          print_rows({"length", "copies"}, rows);
        }
        if (!r.solution) {
          std::cerr << "no solution (" << perm::to_string(r.failure) << ")\n";
          return kNoSolution;
        }
        std::cout << (fmt == Format::compact ? io::format_compact(*r.solution)
                                             : io::format_compact_expr(*r.solution) + "\n");
        return kSolved;
      }
      const Polynomial p = poly_of(a1);
      const Fdds b = value_of(a2, fmt);
      if (all_permutations(p, b)) {
        auto r = perm::solve_pseudo_inj_perm(p, b);
        if (trace) trace_poly(r);
        return report(r.solution, perm::to_string(r.failure), fmt);
      }
      auto r = solver::solve_pseudo_inj_fdds(p, b);
      if (trace) trace_general(r);
      return report(r.solution, perm::to_string(r.failure), fmt);
    }
    if (*unr) {
      const Fdds a = value_of(a1, fmt);
      std::map<TransientTree, Count> f;
      unroll::TreeArena ar;
      for (const auto& run : unroll::unroll_cut(ar, a, depth).runs) {
        f[ar.to_transient(run.id)] += run.mult;
      }
      std::cout << io::format_forest({f.begin(), f.end()});
      return kSolved;
    }
    if (*classify) {
      const auto s = solver::classify_fdds_poly(poly_of(a1));
      std::cout << "seed " << s.g << "\n"
                << "pseudo-injective " << (s.pseudo_injective ? "yes" : "no") << "\n"
                << "injective " << (s.injective ? "yes" : "no") << "\n";
      return s.pseudo_injective ? kSolved : kNoSolution;
    }
    if (*witness) {
      const auto w = solver::noninjectivity_witness(poly_of(a1), k);
      std::cout << "X = " << e(w.x) << "\nY = " << e(w.y) << "\n";
      return kSolved;
    }
    if (*orc) {
      const auto sols = oracle::oracle_solve(poly_of(a1), value_of(a2, fmt), max_states);
      for (const auto& x : sols) std::cout << show(x, fmt);
      return sols.empty() ? kNoSolution : kSolved;
    }
    if (*alcm) {
      const nt::BigNat a(a1), b(a2);
      std::vector<nt::AlcmStep> rows;
      const nt::BigNat c = nt::alcm_iter(a, b, trace ? &rows : nullptr);
      if (trace) {
        std::vector<std::vector<std::string>> out;
        for (const auto& r : rows) {
          out.push_back({r.res1.get_str(), r.res2.get_str(), r.pow ? r.pow->get_str() : ""});
        }
        print_rows({"res1", "res2", "pow"}, out);
      }
      std::cout << c.get_str() << "\n";
      return kSolved;
    }
  } catch (const io::ParseError& err) {
    std::cerr << "parse error at " << err.what() << "\n";
    return kBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
