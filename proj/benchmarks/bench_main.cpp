// Copyright 2026 The invforge Authors
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

#include <benchmark/benchmark.h>

#include "invforge/invforge.hpp"

namespace {

using namespace invforge;

void BM_TransvectantGeneric(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  std::vector<std::string> names = coefficient_names("f", d);
  names.push_back("x0");
  names.push_back("x1");
  const auto reg = VarRegistry::create(names);
  const BinaryForm f = generic_form(reg, "f", d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transvectant(f, f, d / 2));
  }
}
BENCHMARK(BM_TransvectantGeneric)->Arg(4)->Arg(6)->Arg(8);

void BM_AlphaRank(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const ExactMatrix m = alpha_matrix(1, d, 3);
    benchmark::DoNotOptimize(exact_rank(m));
  }
}
BENCHMARK(BM_AlphaRank)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_N1Brute(benchmark::State& state) {
  const unsigned e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n1_brute(e, e / 2));
}
BENCHMARK(BM_N1Brute)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Tau(benchmark::State& state) {
  const unsigned r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau(r, 2, r));
}
BENCHMARK(BM_Tau)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const auto reg = VarRegistry::create({"x0", "x1"});
  const BinaryForm f(Poly::parse("3*x0^8 - x0^5*x1^3 + 2*x0*x1^7 + x1^8", reg), kX, 8);
  for (auto _ : state) benchmark::DoNotOptimize(membership(f));
}
BENCHMARK(BM_Membership)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
