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
#include <set>

#include "slowcol/coloring.hpp"
#include "slowcol/errors.hpp"
#include "slowcol/generators.hpp"
#include "slowcol/rng.hpp"

using namespace slowcol;

TEST_CASE("fixed families have the expected shape") {
    CHECK(gen_complete(5).m() == 10);
    CHECK(gen_path(6).m() == 5);
    CHECK(gen_cycle(6).m() == 6);
    CHECK(gen_star(7).m() == 6);
    CHECK(gen_star(7).degree(0) == 6);
    CHECK(gen_edgeless(4).m() == 0);
    CHECK_THROWS_AS(gen_cycle(2), BadInput);
    CHECK_THROWS_AS(gen_complete(-1), BadInput);
}

TEST_CASE("complete multipartite graph joins all cross pairs") {
    std::vector<int> sizes{3, 2, 2};
    Graph g = gen_complete_multipartite(sizes);
    CHECK(g.n() == 7);
    CHECK(g.m() == 3 * 2 + 3 * 2 + 2 * 2);
    auto parts = multipartite_parts(sizes);
    REQUIRE(parts.size() == 3);
    int total = 0;
    for (const VertexSet& p : parts) {
        total += static_cast<int>(p.size());
        CHECK(is_independent(g, p));
    }
    CHECK(total == 7);
    for (int u : parts[0])
        for (int v : parts[1]) CHECK(g.adjacent(u, v));
}

TEST_CASE("disjoint union offsets ids blockwise") {
    Graph u = gen_disjoint_union({gen_path(3), gen_complete(3)});
    CHECK(u.n() == 6);
    CHECK(u.m() == 2 + 3);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(3, 5));
    CHECK(!u.adjacent(2, 3));
}

TEST_CASE("product of a 4-cycle and a path") {
    Graph g = gen_c4_box_path(3);
    CHECK(g.n() == 12);
    CHECK(g.m() == 4 * 3 + 4 * 2);  // three 4-cycles plus two perfect matchings
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) >= 3);
    CHECK_THROWS_AS(gen_c4_box_path(0), BadInput);
}

TEST_CASE("random tree is a tree and respects its seed") {
    Rng a(7), b(7), c(8);
    Graph t1 = gen_random_tree(9, a);
    Graph t2 = gen_random_tree(9, b);
    Graph t3 = gen_random_tree(9, c);
    CHECK(t1.m() == 8);
    CHECK(is_forest(t1, t1.vertices()));
    CHECK(is_connected(t1, t1.vertices()));
    CHECK(t1.edges() == t2.edges());
    CHECK(t1.edges() != t3.edges());
}

TEST_CASE("random graph determinism") {
    Rng a(3), b(3);
    Graph g1 = gen_random_graph(10, 0.4, a);
    Graph g2 = gen_random_graph(10, 0.4, b);
    CHECK(g1.edges() == g2.edges());
}

TEST_CASE("maximal outerplanar instances carry a consistent certificate") {
    Rng rng(12);
    for (int n : {3, 4, 5, 8, 13, 21, 40}) {
        OuterplanarCert cert;
        Graph g = gen_maximal_outerplanar(n, rng, &cert);
        CHECK(g.m() == 2 * n - 3);
        CHECK(is_connected(g, g.vertices()));
        CHECK(degeneracy(g) <= 2);

        // outer cycle: hamiltonian, edges present
        REQUIRE(static_cast<int>(cert.outer_cycle.size()) == n);
        std::set<int> seen(cert.outer_cycle.begin(), cert.outer_cycle.end());
        CHECK(static_cast<int>(seen.size()) == n);
        for (int i = 0; i < n; ++i) {
            int u = cert.outer_cycle[i];
            int v = cert.outer_cycle[(i + 1) % n];
            if (n > 2) CHECK(g.adjacent(u, v));
        }

        // triangulated interior: n-2 triangles, all edges present
        REQUIRE(static_cast<int>(cert.triangles.size()) == n - 2);
        for (const auto& tri : cert.triangles) {
            CHECK(g.adjacent(tri[0], tri[1]));
            CHECK(g.adjacent(tri[1], tri[2]));
            CHECK(g.adjacent(tri[0], tri[2]));
        }
    }
    CHECK_THROWS_AS(gen_maximal_outerplanar(0, rng), BadInput);
    // degenerate sizes below the first triangle: a point and a single edge
    CHECK(gen_maximal_outerplanar(1, rng).m() == 0);
    CHECK(gen_maximal_outerplanar(2, rng).m() == 1);
}

TEST_CASE("maximal outerplanar graphs are 3-colorable") {
    Rng rng(13);
    for (int n : {3, 6, 9, 12, 15}) {
        Graph g = gen_maximal_outerplanar(n, rng);
        CHECK(proper_coloring(g, 3).has_value());
    }
}

TEST_CASE("maximal planar instances carry a consistent certificate") {
    Rng rng(14);
    for (int n : {4, 5, 6, 9, 14, 25}) {
        PlanarCert cert;
        Graph g = gen_maximal_planar(n, rng, &cert);
        CHECK(g.m() == 3 * n - 6);
        CHECK(is_connected(g, g.vertices()));
        CHECK(degeneracy(g) <= 5);
        REQUIRE(static_cast<int>(cert.faces.size()) == 2 * n - 4);
        for (const auto& f : cert.faces) {
            CHECK(g.adjacent(f[0], f[1]));
            CHECK(g.adjacent(f[1], f[2]));
            CHECK(g.adjacent(f[0], f[2]));
        }
        // Euler count double-checks the face list: each edge borders two
        // triangles, so 3 * faces == 2 * m.
        CHECK(3 * static_cast<int>(cert.faces.size()) == 2 * g.m());
    }
    CHECK_THROWS_AS(gen_maximal_planar(2, rng), BadInput);
}

TEST_CASE("maximal planar graphs are 4-colorable at test sizes") {
    Rng rng(15);
    for (int n : {4, 7, 10, 12}) {
        Graph g = gen_maximal_planar(n, rng);
        CHECK(proper_coloring(g, 4).has_value());
    }
}
