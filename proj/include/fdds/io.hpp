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

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdds/core.hpp"
#include "fdds/perm.hpp"

namespace fdds::io {

// Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// expr ::= '0' | term ('+' term)*
// term ::= [INT ['*']] 'C' INT ['[' tree (',' tree)* ']']
// The bracket lists the trees hanging on consecutive cycle nodes; without
// it the term is a bare cycle.
Fdds parse_expr(std::string_view text);
std::string format_expr(const Fdds& a);

// N, then N successors.
Fdds parse_table(std::string_view text);
std::string format_table(const Fdds& a);

// One "<len> <mult>" pair per line, or a cycle-only expression with
// arbitrary-precision integers.
perm::CompactPerm parse_compact(std::string_view text);
std::string format_compact(const perm::CompactPerm& a);
std::string format_compact_expr(const perm::CompactPerm& a);

TransientTree parse_tree(std::string_view text);
std::string format_tree(const TransientTree& t);
// One tree per line, optionally prefixed by "k*".
std::vector<std::pair<TransientTree, Count>> parse_forest(std::string_view text);
std::string format_forest(const std::vector<std::pair<TransientTree, Count>>& f);

// Resolves "@path" coefficient references.
using Loader = std::function<std::string(const std::string&)>;

// Lines (or ';'-separated items) "<degree>: <value | @file>".  Repeated
// degrees add up.
Polynomial parse_poly(std::string_view text, const Loader& load = {});
perm::CompactPoly parse_compact_poly(std::string_view text, const Loader& load = {});
std::string format_poly(const Polynomial& p);

std::string read_file(const std::string& path);

}  // namespace fdds::io
