// Copyright 2026 The seqmps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <benchmark/benchmark.h>

#include "seqmps/cavity.hpp"
#include "seqmps/compiler.hpp"
#include "seqmps/generation.hpp"
#include "seqmps/mps.hpp"
#include "seqmps/random.hpp"

using namespace seqmps;

static void BM_MpsFromDense(benchmark::State& state) {
  Rng rng(1);
  PureState psi = random_state(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mps_from_dense(psi, 1e-12));
}
BENCHMARK(BM_MpsFromDense)->Arg(8)->Arg(10)->Arg(12);

static void BM_MpsToDense(benchmark::State& state) {
  Rng rng(2);
  MatrixProductState mps = random_mps(static_cast<int>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mps_to_dense(mps));
}
BENCHMARK(BM_MpsToDense)->Arg(8)->Arg(10);

static void BM_CompilePlan(benchmark::State& state) {
  Rng rng(3);
  MatrixProductState mps =
      random_mps(8, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(compile_plan(mps, 1e-12));
}
BENCHMARK(BM_CompilePlan)->Arg(2)->Arg(4);

static void BM_RunPlan(benchmark::State& state) {
  Rng rng(4);
  GenerationPlan plan =
      compile_plan(random_mps(8, static_cast<int>(state.range(0)), rng), 1e-12)
          .plan;
  for (auto _ : state) benchmark::DoNotOptimize(run_plan(plan));
}
BENCHMARK(BM_RunPlan)->Arg(2)->Arg(4);

static void BM_SchmidtRank(benchmark::State& state) {
  Rng rng(5);
  PureState psi = random_state(10, rng);
  for (auto _ : state) {
    for (int cut = 1; cut < 10; ++cut)
      benchmark::DoNotOptimize(schmidt_rank_at_cut(psi, cut, 1e-10));
  }
}
BENCHMARK(BM_SchmidtRank);

static void BM_SelectivityFull(benchmark::State& state) {
  CavityModel m = CavityModel::resonant(1.0, 1.0, 200.0,
                                        static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(selectivity_error(m, HamiltonianLevel::kFull));
}
BENCHMARK(BM_SelectivityFull)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
