// Copyright 2026 The omegaset Authors
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


#include <benchmark/benchmark.h>

#include <memory>

#include "omegaset/sheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/topos.hpp"
#include "pool.hpp"

namespace {

using namespace omegaset;

AlgebraPtr share(HeytingAlgebra h) { return std::make_shared<const HeytingAlgebra>(std::move(h)); }

void BM_BuildChain(benchmark::State& state) {
  const PosetSpec spec = algebras::chain(static_cast<std::size_t>(state.range(0))).to_spec();
  for (auto _ : state) benchmark::DoNotOptimize(HeytingAlgebra::build(spec));
}
BENCHMARK(BM_BuildChain)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumerateAlgebras(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tools::enumerate_algebras(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateAlgebras)->Arg(5)->Arg(6);

void BM_EnumerateTSets(benchmark::State& state) {
  auto c = share(algebras::chain3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(tools::enumerate_tsets(c, static_cast<std::size_t>(state.range(0)), {}));
  }
}
BENCHMARK(BM_EnumerateTSets)->Arg(2)->Arg(3)->Arg(4);

void BM_SheafCheck(benchmark::State& state) {
  auto d = share(algebras::diamond());
  const Topology j = territory_topology(*d);
  const auto sheaves = tools::enumerate_sheaves(d, j, 4);
  for (auto _ : state) {
    for (const auto& s : sheaves) benchmark::DoNotOptimize(is_sheaf(s, j));
  }
}
BENCHMARK(BM_SheafCheck);

void BM_Sheafify(benchmark::State& state) {
  auto d = share(algebras::diamond());
  const Topology j = territory_topology(*d);
  const Presheaf p = doubled_point(d);
  for (auto _ : state) benchmark::DoNotOptimize(sheafify(p, j));
}
BENCHMARK(BM_Sheafify);

void BM_Exponential(benchmark::State& state) {
  auto c = share(algebras::chain3());
  const Topology j = territory_topology(*c);
  const auto sheaves = tools::enumerate_sheaves(c, j, 3);
  for (auto _ : state) {
    for (const auto& x : sheaves) {
      for (const auto& y : sheaves) benchmark::DoNotOptimize(exponential(x, y));
    }
  }
}
BENCHMARK(BM_Exponential);

void BM_ToposAxiomsChain3(benchmark::State& state) {
  auto c = share(algebras::chain3());
  const Topology j = territory_topology(*c);
  const auto sheaves = tools::enumerate_sheaves(c, j, 3);
  const std::vector<std::string> names(sheaves.size(), "S");
  for (auto _ : state) benchmark::DoNotOptimize(check_topos_axioms(sheaves, names, j));
}
BENCHMARK(BM_ToposAxiomsChain3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
