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

#include <exception>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

namespace fdds::detail {

// Unroll cuts are as deep as tens of thousands of levels and every tree
// kernel recurses on depth.  Such work runs on a dedicated thread whose
// stack is reserved lazily.
void run_on_big_stack(const std::function<void()>& body);
bool on_big_stack();

template <typename F>
auto with_deep_stack(F&& f) -> std::invoke_result_t<F&> {
  using R = std::invoke_result_t<F&>;
  if (on_big_stack()) return f();
  std::exception_ptr err;
  if constexpr (std::is_void_v<R>) {
    run_on_big_stack([&] {
      try {
        f();
      } catch (...) {
        err = std::current_exception();
      }
    });
    if (err) std::rethrow_exception(err);
  } else {
    std::optional<R> out;
    run_on_big_stack([&] {
      try {
        out.emplace(f());
      } catch (...) {
        err = std::current_exception();
      }
    });
    if (err) std::rethrow_exception(err);
    return std::move(*out);
  }
}

}  // namespace fdds::detail
