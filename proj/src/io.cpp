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

#include "fdds/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace fdds::io {

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

// Scanner that remembers where it is in the original input.
class Cursor {
 public:
  Cursor(std::string_view s, std::size_t line = 1, std::size_t col = 1)
      : s_(s), line_(line), col_(col) {}

  bool done() const { return i_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  char get() {
    char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    get();
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col_);
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected a number");
    return out;
  }
  std::uint64_t u64() {
    skip_ws();
    const auto l = line_, c = col_;
    std::string d = digits();
    std::uint64_t v = 0;
    for (char ch : d) {
      const std::uint64_t k = ch - '0';
      if (v > (std::numeric_limits<std::uint64_t>::max() - k) / 10) {
        throw ParseError("number out of range", l, c);
      }
      v = v * 10 + k;
    }
    return v;
  }
  TransientTree tree() {
    skip_ws();
    const auto l = line_, c = col_;
    std::string code;
    int level = 0;
    do {
      if (done()) throw ParseError("unbalanced tree", l, c);
      char ch = peek();
      if (ch != '(' && ch != ')') fail(std::string("unexpected '") + ch + "' in tree");
      level += ch == '(' ? 1 : -1;
      code += get();
    } while (level > 0);
    if (level < 0) throw ParseError("unmatched ')'", l, c);
    return TransientTree::parse(code);
  }
  // A lone "0" is the empty value.
  bool eat_zero() {
    skip_ws();
    Cursor look = *this;
    if (look.peek() != '0') return false;
    look.get();
    look.skip_ws();
    if (!look.done()) return false;
    *this = look;
    return true;
  }
  void finish() {
    skip_ws();
    if (!done()) fail(std::string("unexpected '") + peek() + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_, col_;
};

Fdds expr_at(Cursor& cur) {
  if (cur.eat_zero()) return Fdds();
  std::vector<Fdds::Entry> terms;
  do {
    cur.skip_ws();
    Count mult = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      mult = cur.u64();
      cur.eat('*');
    }
    cur.expect('C');
    cur.skip_ws();
    const auto l = cur.line(), c = cur.col();
    const std::uint64_t len = cur.u64();
    if (len == 0) throw ParseError("cycle length must be positive", l, c);
    std::vector<TransientTree> trees;
    if (cur.eat('[')) {
      do trees.push_back(cur.tree());
      while (cur.eat(','));
      cur.expect(']');
      if (trees.size() != len) {
        throw ParseError("C" + std::to_string(len) + " needs " + std::to_string(len) +
                             " trees, got " + std::to_string(trees.size()),
                         l, c);
      }
    } else {
      trees.assign(len, TransientTree());
    }
    if (mult) terms.emplace_back(Component::from_trees(std::move(trees)), mult);
  } while (cur.eat('+'));
  cur.finish();
  return Fdds::from_entries(std::move(terms));
}

perm::CompactPerm compact_at(Cursor& cur) {
  using nt::BigNat;
  if (cur.eat_zero()) return {};
  std::vector<perm::CompactPerm::Entry> out;
  // Expression form if a 'C' shows up before the first newline-separated pair.
  bool expr = false;
  {
    Cursor look = cur;
    while (!look.done()) {
      char ch = look.get();
      if (ch == 'C' || ch == '+' || ch == '*') {
        expr = true;
        break;
      }
    }
  }
  if (!expr) {
    while (true) {
      cur.skip_ws();
      if (cur.done()) break;
      if (cur.peek() == '#') {
        while (!cur.done() && cur.peek() != '\n') cur.get();
        continue;
      }
      const auto l = cur.line(), c = cur.col();
      BigNat len(cur.digits()), mult(cur.digits());
      if (len == 0) throw ParseError("cycle length must be positive", l, c);
      if (!out.empty() && out.back().len >= len) {
        throw ParseError("lengths must be strictly ascending", l, c);
      }
      if (mult != 0) out.push_back({len, mult});
    }
    return perm::CompactPerm::from_entries(std::move(out));
  }

  do {
    cur.skip_ws();
    BigNat mult = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      mult = BigNat(cur.digits());
      cur.eat('*');
    }
    cur.expect('C');
    cur.skip_ws();
    const auto l = cur.line(), c = cur.col();
    BigNat len(cur.digits());
    if (len == 0) throw ParseError("cycle length must be positive", l, c);
    if (mult != 0) out.push_back({len, mult});
  } while (cur.eat('+'));
  cur.finish();
  return perm::CompactPerm::from_entries(std::move(out));
}

struct RawCoeff {
  std::size_t degree;
  std::string text;
  std::size_t line, col;
};

std::vector<RawCoeff> split_poly(std::string_view text, const Loader& load) {
  std::vector<RawCoeff> out;
  Cursor cur(text);
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.peek() == '#') {
      while (!cur.done() && cur.peek() != '\n') cur.get();
      continue;
    }
    const auto l = cur.line(), c = cur.col();
    const std::uint64_t deg = cur.u64();
    if (deg > 64) throw ParseError("degree too large", l, c);
    cur.expect(':');
    cur.skip_ws();
    RawCoeff rc{static_cast<std::size_t>(deg), {}, cur.line(), cur.col()};
    while (!cur.done() && cur.peek() != '\n' && cur.peek() != ';') rc.text += cur.get();
    if (!cur.done()) cur.get();
    while (!rc.text.empty() && std::isspace(static_cast<unsigned char>(rc.text.back()))) {
      rc.text.pop_back();
    }
    if (!rc.text.empty() && rc.text.front() == '@') {
      if (!load) throw ParseError("file references are not allowed here", rc.line, rc.col);
      try {
        rc.text = load(rc.text.substr(1));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(e.what(), rc.line, rc.col);
      }
      rc.line = 1;
      rc.col = 1;
    }
    if (rc.text.empty()) throw ParseError("empty coefficient", rc.line, rc.col);
    out.push_back(std::move(rc));
  }
  if (out.empty()) cur.fail("empty polynomial");
  return out;
}

}  // namespace

Fdds parse_expr(std::string_view text) {
  Cursor cur(text);
  return expr_at(cur);
}

std::string format_expr(const Fdds& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [c, m] : a.entries()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += "C" + std::to_string(c.cycle_len());
    if (!c.is_cycle()) {
      out += "[";
      for (std::size_t j = 0; j < c.trees().size(); ++j) {
        if (j) out += ",";
        out += c.trees()[j].code();
      }
      out += "]";
    }
  }
  return out;
}

Fdds parse_table(std::string_view text) {
  Cursor cur(text);
  const std::uint64_t n = cur.u64();
  if (n > std::numeric_limits<std::uint32_t>::max()) cur.fail("too many states");
  std::vector<std::uint32_t> succ(n);
  for (auto& s : succ) {
    cur.skip_ws();
    const auto l = cur.line(), c = cur.col();
    const std::uint64_t v = cur.u64();
    if (v >= n) throw ParseError("successor out of range", l, c);
    s = static_cast<std::uint32_t>(v);
  }
  cur.finish();
  return canonicalize(succ);
}

std::string format_table(const Fdds& a) {
  const auto t = to_table(a);
  std::string out = std::to_string(t.size()) + "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(t[i]);
  }
  return out + "\n";
}

perm::CompactPerm parse_compact(std::string_view text) {
  Cursor cur(text);
  return compact_at(cur);
}

std::string format_compact(const perm::CompactPerm& a) {
  std::string out;
  for (const auto& e : a.entries()) out += e.len.get_str() + " " + e.mult.get_str() + "\n";
  return out;
}

std::string format_compact_expr(const perm::CompactPerm& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& e : a.entries()) {
    if (!out.empty()) out += " + ";
    if (e.mult != 1) out += e.mult.get_str() + "*";
    out += "C" + e.len.get_str();
  }
  return out;
}

TransientTree parse_tree(std::string_view text) {
  Cursor cur(text);
  TransientTree t = cur.tree();
  cur.finish();
  return t;
}

std::string format_tree(const TransientTree& t) { return t.code(); }

std::vector<std::pair<TransientTree, Count>> parse_forest(std::string_view text) {
  std::map<TransientTree, Count> acc;
  Cursor cur(text);
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    Count k = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      k = cur.u64();
      cur.expect('*');
    }
    TransientTree t = cur.tree();
    if (k) acc[t] += k;
  }
  return {acc.begin(), acc.end()};
}

std::string format_forest(const std::vector<std::pair<TransientTree, Count>>& f) {
  std::string out;
  for (const auto& [t, k] : f) {
    if (k != 1) out += std::to_string(k) + "*";
    out += t.code() + "\n";
  }
  return out;
}

Polynomial parse_poly(std::string_view text, const Loader& load) {
  std::vector<Fdds> coeffs;
  for (const auto& rc : split_poly(text, load)) {
    Cursor cur(rc.text, rc.line, rc.col);
    Fdds v = expr_at(cur);
    if (coeffs.size() <= rc.degree) coeffs.resize(rc.degree + 1);
    coeffs[rc.degree] = add(coeffs[rc.degree], v);
  }
  return Polynomial(std::move(coeffs));
}

perm::CompactPoly parse_compact_poly(std::string_view text, const Loader& load) {
  perm::CompactPoly p;
  for (const auto& rc : split_poly(text, load)) {
    Cursor cur(rc.text, rc.line, rc.col);
    auto v = compact_at(cur);
    if (p.coeffs.size() <= rc.degree) p.coeffs.resize(rc.degree + 1);
    p.coeffs[rc.degree] = perm::compact_add(p.coeffs[rc.degree], v);
  }
  while (!p.coeffs.empty() && p.coeffs.back().empty()) p.coeffs.pop_back();
  return p;
}

std::string format_poly(const Polynomial& p) {
  std::string out;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    if (p.coeffs[i].empty()) continue;
    out += std::to_string(i) + ": " + format_expr(p.coeffs[i]) + "\n";
  }
  return out.empty() ? "0: 0\n" : out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fdds::io
