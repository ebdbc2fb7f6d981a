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

// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fdds/io.hpp"
#include "fdds/oracle.hpp"

namespace {

using namespace fdds;

void BM_SweepSerial(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(oracle::by_sweep_serial(static_cast<unsigned>(st.range(0))));
  }
}
BENCHMARK(BM_SweepSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(oracle::by_sweep(static_cast<unsigned>(st.range(0))));
  }
}
BENCHMARK(BM_SweepParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

const oracle::OracleIndex& index9() {
  static const auto idx = oracle::enumerate_fdds(9);
  return idx;
}

// C2 X^2 + (C4 + C6) X = 16C2 + 4C4 + 18C6 + C12 scanned over sizes <= 9.
const Polynomial& poly() {
  static const auto p = io::parse_poly("2: C2\n1: C4 + C6\n");
  return p;
}
const Fdds& rhs() {
  static const auto b = io::parse_expr("16*C2 + 4*C4 + 18*C6 + C12");
  return b;
}

void BM_OracleSerial(benchmark::State& st) {
  const auto& idx = index9();
  for (auto _ : st) benchmark::DoNotOptimize(oracle::oracle_solve_serial(poly(), rhs(), idx));
}
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);

void BM_OracleParallel(benchmark::State& st) {
  const auto& idx = index9();
  for (auto _ : st) benchmark::DoNotOptimize(oracle::oracle_solve(poly(), rhs(), idx));
}
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
