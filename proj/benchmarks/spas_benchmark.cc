/*
Copyright 2026 The spas Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


#include <benchmark/benchmark.h>

#include "spas/enumeration.h"
#include "spas/generator.h"
#include "spas/lattice.h"
#include "spas/solvers.h"
#include "spas/stability.h"

namespace spas {
namespace {

// Unit-capacity instances. The pinned seeds give several stable matchings:
// 8 students seed 30 has six, 12 seed 2 and 16 seed 19 have three.
Instance Tight(std::size_t students, std::uint64_t seed) {
  GenParams p;
  p.students = students;
  p.projects = students;
  p.lecturers = 3;
  p.min_list_length = 2;
  p.max_list_length = 5;
  p.max_project_capacity = 1;
  p.density = 0.6;
  p.seed = seed;
  return generate(p);
}

std::uint64_t PinnedSeed(std::int64_t students) {
  return students == 8 ? 30 : students == 12 ? 2 : 19;
}

Instance Random(std::size_t students, std::uint64_t seed) {
  GenParams p;
  p.students = students;
  p.projects = students / 2 + 1;
  p.lecturers = 3;
  p.max_list_length = 5;
  p.seed = seed;
  return generate(p);
}

void BM_EnumerateAll(benchmark::State& state) {
  const Instance i = Tight(static_cast<std::size_t>(state.range(0)),
                           PinnedSeed(state.range(0)));
  state.counters["matchings"] =
      static_cast<double>(enumerate_all(i).size());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(i));
}
BENCHMARK(BM_EnumerateAll)->Arg(8)->Arg(12)->Arg(16)
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateAllParallel(benchmark::State& state) {
  const Instance i = Tight(static_cast<std::size_t>(state.range(0)),
                           PinnedSeed(state.range(0)));
  EnumerateOptions options;
  options.parallel = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(i, options));
}
BENCHMARK(BM_EnumerateAllParallel)->Arg(12)->Arg(16)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_SolveStudentOptimal(benchmark::State& state) {
  const Instance i = Random(static_cast<std::size_t>(state.range(1)), 7);
  const auto method = state.range(0) == 0 ? SolveMethod::kEnumerationExtremum
                                          : SolveMethod::kDeferredAcceptance;
  state.SetLabel(to_string(method));
  for (auto _ : state) benchmark::DoNotOptimize(solve_student_optimal(i, method));
}
BENCHMARK(BM_SolveStudentOptimal)->ArgsProduct({{0, 1}, {8, 14}});

void BM_SolveLecturerOptimal(benchmark::State& state) {
  const Instance i = Random(static_cast<std::size_t>(state.range(1)), 7);
  const auto method = state.range(0) == 0 ? SolveMethod::kEnumerationExtremum
                                          : SolveMethod::kDeferredAcceptance;
  state.SetLabel(to_string(method));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lecturer_optimal(i, method));
  }
}
BENCHMARK(BM_SolveLecturerOptimal)->ArgsProduct({{0, 1}, {8, 14}});

void BM_DeferredAcceptanceLarge(benchmark::State& state) {
  const Instance i = Random(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_student_optimal(i, SolveMethod::kDeferredAcceptance));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeferredAcceptanceLarge)
    ->RangeMultiplier(4)
    ->Range(64, 4096)
    ->Complexity();

void BM_FindBlockingPairs(benchmark::State& state) {
  const Instance i = Random(static_cast<std::size_t>(state.range(0)), 3);
  const Matching m = solve_student_optimal(i, SolveMethod::kDeferredAcceptance);
  for (auto _ : state) benchmark::DoNotOptimize(find_blocking_pairs(i, m));
}
BENCHMARK(BM_FindBlockingPairs)->Arg(64)->Arg(1024);

void BM_BuildHasse(benchmark::State& state) {
  const Instance i = Tight(static_cast<std::size_t>(state.range(0)),
                           PinnedSeed(state.range(0)));
  const StableSet set = enumerate_all(i);
  state.counters["matchings"] = static_cast<double>(set.size());
  for (auto _ : state) benchmark::DoNotOptimize(build_hasse(i, set));
}
BENCHMARK(BM_BuildHasse)->Arg(8)->Arg(12);

}  // namespace
}  // namespace spas

BENCHMARK_MAIN();
