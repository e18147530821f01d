/*
 * Copyright 2026 The c2pencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "c2pencil/autgroup.hpp"
#include "c2pencil/random.hpp"

using namespace c2pencil;

static void BM_FieldMultiply(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::canonical(static_cast<unsigned>(state.range(0)));
  Sampler s(1);
  FieldElement x = s.nonzero(f), y = s.nonzero(f);
  for (auto _ : state) {
    x = x * y + y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMultiply)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_FieldInverse(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::canonical(static_cast<unsigned>(state.range(0)));
  Sampler s(2);
  const FieldElement x = s.nonzero(f);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_FieldInverse)->Arg(8)->Arg(32);

static void BM_Pfaffian(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::canonical(8);
  const auto n = static_cast<std::size_t>(state.range(0));
  Sampler s(3);
  Matrix a(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = s.element(f);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

static void BM_NormalizeDisguised(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::canonical(8);
  Sampler s(4);
  const auto nf = s.normal_form(f, static_cast<std::size_t>(state.range(0)));
  const Pencil p = disguise(nf.pencil(), s).pencil;
  for (auto _ : state) benchmark::DoNotOptimize(normalize_pencil(p, true));
}
BENCHMARK(BM_NormalizeDisguised)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ComponentGroup(benchmark::State& state) {
  Sampler s(5);
  const auto nf = s.normal_form(FieldSpec::canonical(10), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(component_group(nf));
}
BENCHMARK(BM_ComponentGroup)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_StructuredOracle(benchmark::State& state) {
  Sampler s(6);
  const auto nf = s.normal_form(FieldSpec::canonical(static_cast<unsigned>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(structured_oracle(nf, std::uint64_t{1} << 40));
}
BENCHMARK(BM_StructuredOracle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_TangentSpace(benchmark::State& state) {
  Sampler s(7);
  const auto nf = s.normal_form(FieldSpec::canonical(8), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tangent_space(nf));
}
BENCHMARK(BM_TangentSpace)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
