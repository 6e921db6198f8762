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

#include <algorithm>
#include <sstream>
#include <vector>

#include "slowcol/errors.hpp"
#include "slowcol/generators.hpp"
#include "slowcol/graph.hpp"
#include "slowcol/rng.hpp"

using namespace slowcol;

namespace {

Graph graph_from_mask(int n, std::uint32_t edge_mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((edge_mask >> bit) & 1u) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool reachable(const Graph& g, const VertexSet& within, int from, int to) {
    if (!within.contains(from) || !within.contains(to)) return false;
    VertexSet seen(g.n());
    seen.add(from);
    std::vector<int> stack{from};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int w : g.neighbors(v) & within) {
            if (seen.contains(w)) continue;
            seen.add(w);
            stack.push_back(w);
        }
    }
    return false;
}

// A vertex lies on a cycle of G[m] exactly when two of its neighbors inside
// m stay connected after the vertex itself is removed.
VertexSet oracle_cycle_vertices(const Graph& g, const VertexSet& m) {
    VertexSet out(g.n());
    for (int v : m) {
        VertexSet rest = m;
        rest.remove(v);
        std::vector<int> nbs = (g.neighbors(v) & m).to_vector();
        bool on_cycle = false;
        for (std::size_t i = 0; i < nbs.size() && !on_cycle; ++i)
            for (std::size_t j = i + 1; j < nbs.size() && !on_cycle; ++j)
                if (reachable(g, rest, nbs[i], nbs[j])) on_cycle = true;
        if (on_cycle) out.add(v);
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), BadInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), BadInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), BadInput);
    CHECK_THROWS_AS(Graph(-1, {}), BadInput);
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.m() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 1));
    CHECK(g.degree(3) == 1);
}

TEST_CASE("induced subgraph keeps adjacency and the id maps invert") {
    Graph g = gen_cycle(5);
    VertexSet keep = VertexSet::of(5, {0, 2, 3});
    InducedSubgraph sub = induced_subgraph(g, keep);
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.m() == 1);  // only 2-3 survives
    for (int v : keep) CHECK(sub.to_parent[sub.from_parent[v]] == v);
    CHECK(sub.map_up(sub.map_down(keep)) == keep);
}

TEST_CASE("connected components are ordered by smallest member") {
    Graph g(7, {{0, 1}, {2, 3}, {3, 4}});
    auto comps = connected_components(g, g.vertices());
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == VertexSet::of(7, {0, 1}));
    CHECK(comps[1] == VertexSet::of(7, {2, 3, 4}));
    CHECK(comps[2] == VertexSet::of(7, {5}));
    CHECK(comps[3] == VertexSet::of(7, {6}));
    CHECK(is_connected(g, comps[1]));
    CHECK(!is_connected(g, g.vertices()));
}

TEST_CASE("forest and independence predicates") {
    Graph g = gen_cycle(4);
    CHECK(!is_forest(g, g.vertices()));
    VertexSet three = VertexSet::of(4, {0, 1, 2});
    CHECK(is_forest(g, three));
    CHECK(is_independent(g, VertexSet::of(4, {0, 2})));
    CHECK(!is_independent(g, VertexSet::of(4, {0, 1})));
    CHECK(is_independent(g, VertexSet(4)));
}

TEST_CASE("degeneracy of standard graphs") {
    CHECK(degeneracy(gen_complete(4)) == 3);
    CHECK(degeneracy(gen_cycle(5)) == 2);
    CHECK(degeneracy(gen_star(8)) == 1);
    CHECK(degeneracy(gen_edgeless(3)) == 0);
    Rng rng(1);
    CHECK(degeneracy(gen_maximal_outerplanar(12, rng)) == 2);
}

TEST_CASE("degeneracy ordering has back degrees within the degeneracy") {
    Rng rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(12));
        Graph g = gen_random_graph(n, rng.next_double(), rng);
        Ordering ord = degeneracy_ordering(g);
        int k = degeneracy(g);
        REQUIRE(static_cast<int>(ord.order.size()) == n);
        CHECK(ord.back_degree == k);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;
        for (int i = 0; i < n; ++i) {
            int v = ord.order[i];
            int back = 0;
            for (int w : g.neighbors(v))
                if (pos[w] < i) ++back;
            CHECK(back <= k);
        }
    }
}

TEST_CASE("cycle_split matches a reachability oracle on every small graph") {
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (std::uint32_t mm = 1; mm < (1u << n); ++mm) {
                VertexSet m(n);
                for (int v = 0; v < n; ++v)
                    if ((mm >> v) & 1u) m.add(v);
                auto [trees, cycles] = cycle_split(g, m);
                VertexSet expect = oracle_cycle_vertices(g, m);
                CHECK(cycles == expect);
                CHECK(trees == m - expect);
            }
        }
    }
}

TEST_CASE("cycle_split matches the oracle on random mid-size graphs") {
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng.next_below(7));
        Graph g = gen_random_graph(n, 0.1 + 0.5 * rng.next_double(), rng);
        VertexSet m(n);
        for (int v = 0; v < n; ++v)
            if (rng.next_bool(0.6)) m.add(v);
        if (m.empty()) m.add(0);
        auto [trees, cycles] = cycle_split(g, m);
        CHECK(cycles == oracle_cycle_vertices(g, m));
        CHECK((trees | cycles) == m);
        CHECK(!trees.intersects(cycles));
    }
}

TEST_CASE("path_order walks from the smaller endpoint") {
    Graph g(6, {{0, 4}, {4, 2}, {2, 5}});
    VertexSet q = VertexSet::of(6, {0, 2, 4, 5});
    CHECK(path_order(g, q) == std::vector<int>{0, 4, 2, 5});
    CHECK(path_order(g, VertexSet::of(6, {3})) == std::vector<int>{3});
    // not a path: fork
    Graph fork(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(path_order(fork, fork.vertices()), BadInput);
}

TEST_CASE("cycle_order starts at the least id toward its smaller neighbor") {
    Graph g = gen_cycle(5);  // edges i - i+1 mod 5
    CHECK(cycle_order(g, g.vertices()) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("max independent set on paths and cycles matches the closed form") {
    for (int n = 1; n <= 12; ++n) {
        Graph p = gen_path(n);
        VertexSet rp = max_independent_path_cycle(p, p.vertices());
        CHECK(rp.size() == (n + 1) / 2);
        CHECK(is_independent(p, rp));
        if (n >= 3) {
            Graph c = gen_cycle(n);
            VertexSet rc = max_independent_path_cycle(c, c.vertices());
            CHECK(rc.size() == n / 2);
            CHECK(is_independent(c, rc));
        }
    }
    // alternation from the smaller endpoint
    Graph p5 = gen_path(5);
    CHECK(max_independent_path_cycle(p5, p5.vertices()) == VertexSet::of(5, {0, 2, 4}));
    Graph c5 = gen_cycle(5);
    CHECK(max_independent_path_cycle(c5, c5.vertices()) == VertexSet::of(5, {0, 2}));
}

TEST_CASE("graph text round trip") {
    Graph g = gen_c4_box_path(2);
    std::ostringstream out;
    write_graph_text(g, out);
    std::istringstream in(out.str());
    Graph back = read_graph_text(in);
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());
    std::istringstream head(out.str());
    int n = -1, m = -1;
    head >> n >> m;
    CHECK(n == 8);
    CHECK(m == 12);
}

TEST_CASE("graph text rejects malformed input") {
    std::istringstream neg("-2 0\n");
    CHECK_THROWS_AS(read_graph_text(neg), BadInput);
    std::istringstream trunc("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph_text(trunc), BadInput);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_graph_text(loop), BadInput);
}
