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

#include <cmath>
#include <sstream>

#include "slowcol/decompose.hpp"
#include "slowcol/errors.hpp"
#include "slowcol/generators.hpp"
#include "slowcol/rng.hpp"
#include "slowcol/solver.hpp"

using namespace slowcol;

namespace {

WeightedPartition two_halves(const Graph& g) {
    int h = g.n() / 2;
    VertexSet a(g.n()), b(g.n());
    for (int v = 0; v < h; ++v) a.add(v);
    for (int v = h; v < g.n(); ++v) b.add(v);
    return WeightedPartition(g, {{a, independent_cost()}, {b, independent_cost()}});
}

}  // namespace

TEST_CASE("weighted partition validates its input") {
    Graph g = gen_path(4);
    VertexSet lo = VertexSet::of(4, {0, 1});
    VertexSet hi = VertexSet::of(4, {2, 3});
    SUBCASE("overlap") {
        VertexSet mid = VertexSet::of(4, {1, 2, 3});
        CHECK_THROWS_AS(WeightedPartition(g, {{lo, Rat(1)}, {mid, Rat(1)}}), BadInput);
    }
    SUBCASE("gap") {
        VertexSet just2 = VertexSet::of(4, {2});
        CHECK_THROWS_AS(WeightedPartition(g, {{lo, Rat(1)}, {just2, Rat(1)}}), BadInput);
    }
    SUBCASE("nonpositive cost") {
        CHECK_THROWS_AS(WeightedPartition(g, {{lo, Rat(0)}, {hi, Rat(1)}}), BadInput);
        CHECK_THROWS_AS(WeightedPartition(g, {{lo, Rat(-1, 2)}, {hi, Rat(1)}}), BadInput);
    }
    SUBCASE("empty parts are dropped") {
        WeightedPartition p(g, {{lo, Rat(1)}, {VertexSet(4), Rat(7)}, {hi, Rat(1)}});
        CHECK(p.count() == 2);
    }
}

TEST_CASE("routing weights normalize and symmetric parts split evenly") {
    Graph g = gen_complete_multipartite({3, 3});
    WeightedPartition p = two_halves(g);
    CHECK(p.weight(0) == doctest::Approx(0.5));
    CHECK(p.weight(1) == doctest::Approx(0.5));
    CHECK(p.weight(0) + p.weight(1) == doctest::Approx(1.0));
    CHECK(p.sqrt_sum_bound() == doctest::Approx(p.weight_sum() * p.weight_sum()));
}

TEST_CASE("sqrt-sum guarantee never exceeds the cost-sum guarantee") {
    // Cauchy-Schwarz, exercised over random partitions with random costs.
    Rng rng(0x63617563687953ULL);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(10));
        Graph g = gen_edgeless(n);
        int cut = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        VertexSet a(n), b(n);
        for (int v = 0; v < cut; ++v) a.add(v);
        for (int v = cut; v < n; ++v) b.add(v);
        Rat ca(1 + static_cast<std::int64_t>(rng.next_below(6)),
               1 + static_cast<std::int64_t>(rng.next_below(4)));
        Rat cb(1 + static_cast<std::int64_t>(rng.next_below(6)),
               1 + static_cast<std::int64_t>(rng.next_below(4)));
        WeightedPartition p(g, {{a, ca}, {b, cb}});
        CHECK(p.sqrt_sum_bound() <= p.cost_sum_bound().to_double() + 1e-9);
    }
}

TEST_CASE("composite painter on a complete bipartite graph") {
    Graph g = gen_complete_multipartite({2, 2});
    auto parts = multipartite_parts({2, 2});
    WeightedPartition wp(g, {{parts[0], independent_cost()}, {parts[1], independent_cost()}});
    CompositePainter painter(wp, {});
    CHECK(painter.name() == "composite");
    auto solver = std::make_shared<ExactSolver>(g);
    auto lister = make_optimal_lister(solver);
    Trace t = play(g, *lister, painter);
    CHECK(trace_consistent(g, t));
    CHECK(!painter.used_fallback());
    double upper = bound_multipartite_upper({2, 2});
    CHECK(t.final_score <= static_cast<std::int64_t>(std::floor(upper + 1e-9)));
    // each local game is legal on its part and held to the part's exact value
    for (int i = 0; i < wp.count(); ++i) {
        InducedSubgraph sub = induced_subgraph(g, wp.part(i).vertices);
        std::int64_t local = 0;
        VertexSet uncolored = sub.graph.vertices();
        for (const Round& r : painter.local_rounds(i)) {
            REQUIRE(!r.marked.empty());
            REQUIRE(r.marked.subset_of(uncolored));
            REQUIRE(r.colored.subset_of(r.marked));
            REQUIRE(is_independent(sub.graph, r.colored));
            local += r.marked.size();
            uncolored -= r.colored;
        }
        CHECK(local == painter.local_score(i));
        CHECK(local <= sum_color_cost(sub.graph));
    }
}

TEST_CASE("single-part composite reduces to the exact painter") {
    Graph g = gen_complete(4);
    WeightedPartition wp(g, {{g.vertices(), complete_cost(4)}});
    CompositePainter painter(wp, {});
    auto solver = std::make_shared<ExactSolver>(g);
    auto lister = make_optimal_lister(solver);
    Trace t = play(g, *lister, painter);
    CHECK(t.final_score == 10);
    CHECK(t.final_score == solver->sum_color_cost());
}

TEST_CASE("degeneracy-budget partition splits a clique into forests") {
    Graph g = gen_complete(4);
    auto parts = partition_degenerate(g, {1, 1});
    REQUIRE(parts.size() == 2);
    VertexSet seen(4);
    for (const VertexSet& p : parts) {
        CHECK(!p.intersects(seen));
        seen |= p;
        CHECK(is_forest(g, p));
    }
    CHECK(seen == g.vertices());
}

TEST_CASE("degeneracy-budget partition rejects infeasible budgets") {
    // pigeonhole: budgets must sum, with one slack each, past the degeneracy
    CHECK_THROWS_AS(partition_degenerate(gen_complete(4), {0, 0}), BadInput);
    CHECK_THROWS_AS(partition_degenerate(gen_cycle(5), {0}), BadInput);
    auto parts = partition_degenerate(gen_cycle(5), {1, 0});
    REQUIRE(parts.size() == 2);
    CHECK(is_forest(gen_cycle(5), parts[0]));
    CHECK(is_independent(gen_cycle(5), parts[1]));
}

TEST_CASE("forest partition follows the parity of the degeneracy") {
    SUBCASE("even: one forest part and one independent part") {
        Rng rng(11);
        Graph g = gen_maximal_outerplanar(9, rng);
        REQUIRE(degeneracy(g) == 2);
        auto parts = forest_partition(g);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].cost == forest_cost());
        CHECK(parts[1].cost == independent_cost());
        CHECK(is_forest(g, parts[0].vertices));
        CHECK(is_independent(g, parts[1].vertices));
    }
    SUBCASE("odd: two forest parts") {
        Graph g = gen_complete(4);
        REQUIRE(degeneracy(g) == 3);
        auto parts = forest_partition(g);
        REQUIRE(parts.size() == 2);
        for (const WeightedPart& p : parts) {
            CHECK(p.cost == forest_cost());
            CHECK(is_forest(g, p.vertices));
        }
    }
}

TEST_CASE("acyclic class pairing yields forest parts") {
    Graph g = gen_cycle(4);
    auto col = acyclic_coloring(g, 3);
    REQUIRE(col.has_value());
    auto parts = acyclic_pair_partition(g, *col);
    REQUIRE(parts.size() == 2);
    // three classes pair largest-first: one forest pair, one leftover
    CHECK(parts[0].cost == forest_cost());
    CHECK(parts[0].vertices.size() == 3);
    CHECK(is_forest(g, parts[0].vertices));
    CHECK(parts[1].cost == independent_cost());
    CHECK(parts[1].vertices.size() == 1);
}

TEST_CASE("acyclic class pairing rejects non-acyclic colorings") {
    Graph g = gen_cycle(4);
    auto proper = proper_coloring(g, 2);
    REQUIRE(proper.has_value());
    REQUIRE(!is_acyclic_coloring(g, *proper));
    CHECK_THROWS_AS(acyclic_pair_partition(g, *proper), BadInput);
    // partial-domain coloring is rejected too
    Graph p3 = gen_path(3);
    auto sub = proper_coloring(induced_subgraph(p3, VertexSet::of(3, {0, 1})).graph, 2);
    REQUIRE(sub.has_value());
    CHECK_THROWS_AS(acyclic_pair_partition(p3, *sub), BadInput);
}

TEST_CASE("two-class mix interpolates between the closed-form guarantees") {
    Rat ca(3, 2), cb(1);
    std::int64_t sa = 8, sb = 4;
    double right = static_cast<double>(sa) / (sa + sb);
    double left = ca.to_double() / (ca.to_double() + cb.to_double());
    CHECK(bound_two_class_mix(ca, cb, sa, sb, right) ==
          doctest::Approx(bound_sqrt_sum({ca, cb}, {sa, sb})));
    CHECK(bound_two_class_mix(ca, cb, sa, sb, left) ==
          doctest::Approx(bound_cost_sum({ca, cb}, sa + sb).to_double()));
    CHECK_THROWS_AS(bound_two_class_mix(ca, cb, sa, sb, left - 0.01), BadInput);
    CHECK_THROWS_AS(bound_two_class_mix(ca, cb, sa, sb, right + 0.01), BadInput);
}

TEST_CASE("odd acyclic bound equals the two-class mix over paired classes") {
    // k classes pair into (k-1)/2 forests holding (k-1)/k of the vertices
    for (int k : {3, 5, 7}) {
        std::int64_t n = 12 * k;
        Rat cost_forests(3 * (k - 1), 4);
        std::int64_t size_forests = n * (k - 1) / k;
        double gamma = static_cast<double>(k - 1) / k;
        double mix = bound_two_class_mix(cost_forests, Rat(1), size_forests, n / k, gamma);
        CHECK(bound_acyclic_odd(k, n) == doctest::Approx(mix));
    }
}

TEST_CASE("odd acyclic coefficients land where expected") {
    double c3 = bound_acyclic_odd(3, 100000) / 100000.0;
    CHECK(c3 > 2.4879);
    CHECK(c3 < 2.4881);
    double c5 = bound_acyclic_odd(5, 100000) / 100000.0;
    CHECK(c5 > 3.9855);
    CHECK(c5 < 3.9857);
}

TEST_CASE("equal-cost pq split collapses to the two-forest bound") {
    for (std::int64_t n : {10, 17, 240}) {
        CHECK(bound_pq(1, 1, Rat(3, 2), Rat(3, 2), n) == doctest::Approx(3.0 * n));
        CHECK(bound_two_forests(n) == Rat(3 * n));
    }
}

TEST_CASE("refined multipartite bound never exceeds the plain one") {
    std::vector<std::vector<std::int64_t>> cases = {
        {1, 1}, {2, 2}, {3, 1}, {2, 2, 2}, {5, 4, 3, 2, 1}, {7}, {9, 11}};
    for (const auto& parts : cases) {
        CHECK(bound_multipartite_upper_refined(parts) <=
              bound_multipartite_upper(parts) + 1e-9);
        std::int64_t n = 0;
        for (auto r : parts) n += r;
        CHECK(bound_multipartite_lower(parts) >= n);
    }
}

TEST_CASE("triangular thresholds are frozen") {
    CHECK(max_triangular_below(0) == 0);
    CHECK(max_triangular_below(1) == 1);
    CHECK(max_triangular_below(2) == 1);
    CHECK(max_triangular_below(3) == 2);
    CHECK(max_triangular_below(5) == 2);
    CHECK(max_triangular_below(6) == 3);
    CHECK(max_triangular_below(9) == 3);
    CHECK(max_triangular_below(11) == 4);
}

TEST_CASE("preset part costs") {
    CHECK(forest_cost() == Rat(3, 2));
    CHECK(independent_cost() == Rat(1));
    CHECK(complete_cost(4) == Rat(5, 2));
    CHECK(complete_cost(1) == Rat(1));
}

TEST_CASE("degeneracy and acyclic closed-form bounds") {
    CHECK(bound_degenerate(2, 4) == Rat(10));
    CHECK(bound_degenerate(3, 4) == Rat(12));
    CHECK(bound_acyclic(2, 8) == Rat(12));
    CHECK(bound_acyclic(3, 8) == Rat(20));
}

TEST_CASE("multipartite bounds on concrete part lists") {
    CHECK(bound_multipartite_upper({2, 2}) == doctest::Approx(8.0));
    CHECK(bound_multipartite_lower({2, 2}) == 5);
    CHECK(bound_multipartite_lower({9, 11}) == 32);
    CHECK(bound_multipartite_upper({7}) == doctest::Approx(7.0));
}

TEST_CASE("bound report mirrors its ingredients") {
    Graph g = gen_complete_multipartite({3, 2});
    auto parts = multipartite_parts({3, 2});
    WeightedPartition wp(g, {{parts[0], independent_cost()}, {parts[1], independent_cost()}});
    BoundReport r = bound_report(g, wp);
    CHECK(r.n == 5);
    CHECK(r.m == 6);
    CHECK(r.degeneracy == degeneracy(g));
    CHECK(r.sqrt_sum == doctest::Approx(wp.sqrt_sum_bound()));
    CHECK(r.cost_sum == wp.cost_sum_bound());
    CHECK(r.degenerate == bound_degenerate(r.degeneracy, r.n));
}

TEST_CASE("partition files parse costs and reject junk") {
    std::istringstream ok("0 1 2 c=3/2\n\n3 4\n");
    auto parts = read_partition_text(ok, 5);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices == VertexSet::of(5, {0, 1, 2}));
    CHECK(parts[0].cost == Rat(3, 2));
    CHECK(parts[1].vertices == VertexSet::of(5, {3, 4}));
    CHECK(parts[1].cost == Rat(1));

    std::istringstream bad_id("0 9\n");
    CHECK_THROWS_AS(read_partition_text(bad_id, 5), BadInput);
    std::istringstream bad_tok("0 x1\n");
    CHECK_THROWS_AS(read_partition_text(bad_tok, 5), BadInput);
    std::istringstream bad_cost("0 c=1/0\n");
    CHECK_THROWS_AS(read_partition_text(bad_cost, 5), BadInput);
}
