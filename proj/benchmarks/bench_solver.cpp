/*
 * Copyright 2026 the slowcol authors
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

#include "slowcol/generators.hpp"
#include "slowcol/rng.hpp"
#include "slowcol/solver.hpp"

namespace {

using namespace slowcol;

// Table construction dominates; per-state work is a sweep over submasks, so
// the curve tracks 3^n.
void BM_SolveComplete(benchmark::State& state) {
    Graph g = gen_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ExactSolver solver(g);
        benchmark::DoNotOptimize(solver.sum_color_cost());
    }
}
BENCHMARK(BM_SolveComplete)->DenseRange(8, 12, 2);

void BM_SolvePath(benchmark::State& state) {
    Graph g = gen_path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ExactSolver solver(g);
        benchmark::DoNotOptimize(solver.sum_color_cost());
    }
}
BENCHMARK(BM_SolvePath)->DenseRange(8, 12, 2);

void BM_SolveMaximalOuterplanar(benchmark::State& state) {
    Rng rng(1);
    Graph g = gen_maximal_outerplanar(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        ExactSolver solver(g);
        benchmark::DoNotOptimize(solver.sum_color_cost());
    }
}
BENCHMARK(BM_SolveMaximalOuterplanar)->DenseRange(8, 12, 2);

// Optimal-vs-optimal playout on a prebuilt table isolates the lookup cost.
void BM_OptimalPlayout(benchmark::State& state) {
    Graph g = gen_path(static_cast<int>(state.range(0)));
    auto solver = std::make_shared<ExactSolver>(g);
    for (auto _ : state) {
        auto lister = make_optimal_lister(solver);
        auto painter = make_optimal_painter(solver);
        benchmark::DoNotOptimize(play(g, *lister, *painter).final_score);
    }
}
BENCHMARK(BM_OptimalPlayout)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
