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

#include "fdds/core.hpp"

namespace fdds {

TransientTree TransientTree::from_children(std::vector<TransientTree> kids) {
  std::sort(kids.begin(), kids.end());
  TransientTree t;
  std::size_t len = 2;
  for (const auto& k : kids) len += k.code_.size();
  t.code_.clear();
  t.code_.reserve(len);
  t.code_.push_back('(');
  for (const auto& k : kids) {
    t.code_ += k.code_;
    t.depth_ = std::max(t.depth_, k.depth_ + 1);
    t.size_ += k.size_;
  }
  t.code_.push_back(')');
  return t;
}

TransientTree TransientTree::parse(std::string_view code) {
  std::vector<std::vector<TransientTree>> stack;
  std::optional<TransientTree> done;
  for (std::size_t i = 0; i < code.size(); ++i) {
    char ch = code[i];
    if (ch == '(') {
      if (done) {
        throw std::invalid_argument("tree code: trailing input at offset " +
                                    std::to_string(i));
      }
      stack.emplace_back();
    } else if (ch == ')') {
      if (stack.empty()) {
        throw std::invalid_argument("tree code: unmatched ')' at offset " +
                                    std::to_string(i));
      }
      TransientTree t = from_children(std::move(stack.back()));
      stack.pop_back();
      if (stack.empty()) {
        done = std::move(t);
      } else {
        stack.back().push_back(std::move(t));
      }
    } else {
      throw std::invalid_argument(std::string("tree code: unexpected '") + ch +
                                  "' at offset " + std::to_string(i));
    }
  }
  if (!stack.empty() || !done) {
    throw std::invalid_argument("tree code: unbalanced parentheses");
  }
  return *done;
}

std::vector<TransientTree> TransientTree::children() const {
  std::vector<TransientTree> out;
  int level = 0;
  std::size_t start = 0;
  for (std::size_t i = 1; i + 1 < code_.size(); ++i) {
    if (code_[i] == '(') {
      if (level++ == 0) start = i;
    } else if (--level == 0) {
      TransientTree k;
      k.code_ = code_.substr(start, i - start + 1);
      int d = 0, best = 0;
      Count n = 0;
      for (char ch : k.code_) {
        if (ch == '(') {
          ++n;
          best = std::max(best, ++d);
        } else {
          --d;
        }
      }
      k.depth_ = static_cast<std::uint32_t>(best - 1);
      k.size_ = n;
      out.push_back(std::move(k));
    }
  }
  return out;
}

}  // namespace fdds
