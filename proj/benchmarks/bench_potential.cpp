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
#include "slowcol/potential.hpp"
#include "slowcol/rng.hpp"
#include "slowcol/strategies.hpp"

namespace {

using namespace slowcol;

// Whole games: the painter rebuilds induced subgraphs and recolors each
// round, so cost scales with rounds times coloring work.
void BM_OuterplanarGame(benchmark::State& state) {
    Rng rng(7);
    Graph g = gen_maximal_outerplanar(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        auto painter = make_potential_painter(PotentialClass::Outerplanar);
        auto lister = make_full_lister();
        benchmark::DoNotOptimize(play(g, *lister, *painter).final_score);
    }
}
BENCHMARK(BM_OuterplanarGame)->Arg(100)->Arg(300);

void BM_FourColorableGame(benchmark::State& state) {
    Rng rng(7);
    Graph g = gen_maximal_planar(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        auto painter = make_potential_painter(PotentialClass::FourColorable);
        auto lister = make_random_lister(11, 0.5);
        benchmark::DoNotOptimize(play(g, *lister, *painter).final_score);
    }
}
BENCHMARK(BM_FourColorableGame)->Arg(30)->Arg(60);

void BM_GoodColoring(benchmark::State& state) {
    Rng rng(5);
    int n = static_cast<int>(state.range(0));
    Graph g = gen_maximal_outerplanar(n, rng);
    VertexSet m = g.vertices();
    for (auto _ : state) benchmark::DoNotOptimize(good_coloring(g, m, 3).k);
}
BENCHMARK(BM_GoodColoring)->Arg(50)->Arg(200);

void BM_TotalPotential(benchmark::State& state) {
    Rng rng(5);
    Graph g = gen_maximal_planar(static_cast<int>(state.range(0)), rng);
    PotentialSpec spec = PotentialSpec::four_colorable();
    for (auto _ : state) benchmark::DoNotOptimize(total_potential(g, spec));
}
BENCHMARK(BM_TotalPotential)->Arg(100)->Arg(400);

}  // namespace
