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

#include "fdds/deep_stack.hpp"

#include <pthread.h>
#include <sys/mman.h>

#include <cstring>
#include <stdexcept>
#include <string>

namespace fdds::detail {

namespace {

// Address space only; pages are committed as recursion touches them.
constexpr std::size_t kStackBytes = std::size_t{2} << 30;

thread_local bool tls_big = false;

struct Job {
  const std::function<void()>* body;
};

void* trampoline(void* arg) {
  tls_big = true;
  (*static_cast<Job*>(arg)->body)();
  return nullptr;
}

}  // namespace

bool on_big_stack() { return tls_big; }

void run_on_big_stack(const std::function<void()>& body) {
  void* mem = mmap(nullptr, kStackBytes, PROT_READ | PROT_WRITE,
                   MAP_PRIVATE | MAP_ANONYMOUS | MAP_NORESERVE | MAP_STACK, -1,
                   0);
  if (mem == MAP_FAILED) throw std::runtime_error("cannot reserve deep stack");
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstack(&attr, mem, kStackBytes);
  Job job{&body};
  pthread_t th;
  int rc = pthread_create(&th, &attr, trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    munmap(mem, kStackBytes);
    throw std::runtime_error(std::string("pthread_create: ") + std::strerror(rc));
  }
  pthread_join(th, nullptr);
  munmap(mem, kStackBytes);
}

}  // namespace fdds::detail
