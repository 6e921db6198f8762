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

#include <doctest.h>

#include <bit>
#include <cstdlib>
#include <limits>
#include <vector>

#include "slowcol/errors.hpp"
#include "slowcol/game.hpp"
#include "slowcol/generators.hpp"
#include "slowcol/rng.hpp"
#include "slowcol/solver.hpp"
#include "slowcol/strategies.hpp"

using namespace slowcol;

namespace {

// Independent scoring oracle. Unlike the production solver it minimizes over
// every nonempty independent subset of the mark, not only the maximal ones,
// so agreement between the two is evidence that the maximality restriction
// loses nothing.
struct OracleSolver {
    int n;
    std::vector<std::uint32_t> adj;
    std::vector<char> indep;
    std::vector<std::int64_t> val;

    explicit OracleSolver(const Graph& g) : n(g.n()), adj(g.n(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        std::uint32_t full = n ? (1u << n) - 1 : 0;
        indep.assign(full + 1, 0);
        indep[0] = 1;
        for (std::uint32_t s = 1; s <= full; ++s) {
            int low = std::countr_zero(s);
            std::uint32_t rest = s & (s - 1);
            indep[s] = indep[rest] && (adj[low] & rest) == 0;
        }
        val.assign(full + 1, 0);
        for (std::uint32_t u = 1; u <= full; ++u) {
            std::int64_t best = 0;
            for (std::uint32_t m = u;; m = (m - 1) & u) {
                if (m) {
                    std::int64_t worst = std::numeric_limits<std::int64_t>::max();
                    for (std::uint32_t x = m;; x = (x - 1) & m) {
                        if (x && indep[x]) worst = std::min(worst, val[u ^ x]);
                        if (!x) break;
                    }
                    best = std::max(best, std::popcount(m) + worst);
                }
                if (!m) break;
            }
            val[u] = best;
        }
    }

    std::int64_t score() const { return val.back(); }
};

Graph graph_from_mask(int n, std::uint32_t edge_mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((edge_mask >> bit) & 1u) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("solver matches the unrestricted oracle on every graph up to n=5") {
    for (int n = 0; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            ExactSolver solver(g);
            OracleSolver oracle(g);
            if (solver.sum_color_cost() != oracle.score()) {
                CAPTURE(n);
                CAPTURE(mask);
                REQUIRE(solver.sum_color_cost() == oracle.score());
            }
        }
    }
}

TEST_CASE("solver matches the unrestricted oracle on every graph with n=6") {
    const int n = 6;
    int mismatches = 0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        Graph g = graph_from_mask(n, mask);
        ExactSolver solver(g);
        OracleSolver oracle(g);
        if (solver.sum_color_cost() != oracle.score()) {
            ++mismatches;
            CAPTURE(mask);
            CHECK(solver.sum_color_cost() == oracle.score());
            if (mismatches > 3) break;
        }
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("solver agrees with the oracle on interior states") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(4));
        Graph g = gen_random_graph(n, 0.2 + 0.6 * rng.next_double(), rng);
        ExactSolver solver(g);
        OracleSolver oracle(g);
        for (std::uint32_t u = 0; u < (1u << n); ++u) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((u >> v) & 1u) s.add(v);
            REQUIRE(solver.value(s) == oracle.val[u]);
        }
    }
}

TEST_CASE("known optimal scores") {
    CHECK(sum_color_cost(gen_complete(4)) == 10);
    CHECK(sum_color_cost(gen_complete(6)) == 21);
    CHECK(sum_color_cost(gen_path(2)) == 3);
    CHECK(sum_color_cost(gen_path(4)) == 6);
    CHECK(sum_color_cost(gen_path(6)) == 9);
    CHECK(sum_color_cost(gen_star(6)) == 8);   // 6 + largest t with t(t+1)/2 <= 5
    CHECK(sum_color_cost(gen_star(10)) == 13); // 10 + largest t with t(t+1)/2 <= 9
    CHECK(sum_color_cost(gen_edgeless(7)) == 7);
    CHECK(sum_color_cost(gen_c4_box_path(2)) == 13);  // 1.75 * 8 - 1
}

TEST_CASE("painter best response on a short path") {
    // P3: marking everything, coloring both endpoints beats coloring the
    // middle (leaves a single vertex worth 1 instead of two worth 2).
    Graph g = gen_path(3);
    ExactSolver solver(g);
    VertexSet all = g.vertices();
    VertexSet resp = solver.best_painter_response(all, all);
    CHECK(resp == VertexSet::of(3, {0, 2}));
}

TEST_CASE("lister best mark ties break to the lexicographically least set") {
    // On an edgeless graph every mark yields total n; the least tie is {0}.
    Graph g = gen_edgeless(4);
    ExactSolver solver(g);
    CHECK(solver.best_lister_mark(g.vertices()) == VertexSet::of(4, {0}));
}

TEST_CASE("best response rejects marks outside the uncolored set") {
    Graph g = gen_path(3);
    ExactSolver solver(g);
    VertexSet un = VertexSet::of(3, {0, 1});
    CHECK_THROWS_AS(solver.best_painter_response(un, VertexSet::of(3, {2})), BadInput);
    CHECK_THROWS_AS(solver.best_painter_response(un, VertexSet(3)), BadInput);
}

TEST_CASE("solver cap") {
    CHECK_THROWS_AS(ExactSolver(gen_path(5), 4), CapExceeded);
    CHECK_NOTHROW(ExactSolver(gen_path(5), 5));
    CHECK_THROWS_AS(ExactSolver(gen_path(30), std::nullopt), CapExceeded);
}

TEST_CASE("cap override through the environment") {
    REQUIRE(setenv("SLOWCOL_CAP", "7", 1) == 0);
    CHECK(ExactSolver::default_cap() == 7);
    CHECK_THROWS_AS(sum_color_cost(gen_path(8)), CapExceeded);
    REQUIRE(setenv("SLOWCOL_CAP", "junk", 1) == 0);
    CHECK(ExactSolver::default_cap() == 13);
    REQUIRE(unsetenv("SLOWCOL_CAP") == 0);
    CHECK(ExactSolver::default_cap() == 13);
}

TEST_CASE("optimal strategies reach the game value from both sides") {
    for (const Graph& g : {gen_path(7), gen_complete(5), gen_star(7), gen_cycle(6)}) {
        auto solver = std::make_shared<const ExactSolver>(g);
        auto lister = make_optimal_lister(solver);
        auto painter = make_optimal_painter(solver);
        Trace t = play(g, *lister, *painter);
        CHECK(t.final_score == solver->sum_color_cost());
        CHECK(trace_consistent(g, t));
    }
}

TEST_CASE("optimal painter concedes no more than the value against any lister") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(5));
        Graph g = gen_random_graph(n, 0.5, rng);
        auto solver = std::make_shared<const ExactSolver>(g);
        auto painter = make_optimal_painter(solver);
        auto lister = make_random_lister(rng.next_u64());
        Trace t = play(g, *lister, *painter);
        CHECK(t.final_score <= solver->sum_color_cost());
    }
}

TEST_CASE("optimal lister forces at least the value against any painter") {
    Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(5));
        Graph g = gen_random_graph(n, 0.5, rng);
        auto solver = std::make_shared<const ExactSolver>(g);
        auto lister = make_optimal_lister(solver);
        auto painter = make_greedy_painter();
        Trace t = play(g, *lister, *painter);
        CHECK(t.final_score >= solver->sum_color_cost());
    }
}
