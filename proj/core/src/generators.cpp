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

#include "slowcol/generators.hpp"

#include <numeric>

namespace slowcol {

Graph gen_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw BadInput("gen_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph gen_edgeless(int n) { return Graph(n, {}); }

Graph gen_star(int n) {
    if (n < 1) throw BadInput("gen_star: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph gen_complete_multipartite(const std::vector<int>& part_sizes) {
    std::vector<VertexSet> parts = multipartite_parts(part_sizes);
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    std::vector<int> part_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) part_of[v] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<VertexSet> multipartite_parts(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int r : part_sizes) {
        if (r <= 0) throw BadInput("multipartite part sizes must be positive");
        n += r;
    }
    std::vector<VertexSet> parts;
    int base = 0;
    for (int r : part_sizes) {
        VertexSet p(n);
        for (int v = base; v < base + r; ++v) p.add(v);
        parts.push_back(p);
        base += r;
    }
    return parts;
}

Graph gen_disjoint_union(const std::vector<Graph>& graphs) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph& g : graphs) {
        for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
        n += g.n();
    }
    return Graph(n, edges);
}

Graph gen_c4_box_path(int k) {
    if (k < 1) throw BadInput("gen_c4_box_path: need k >= 1");
    std::vector<std::pair<int, int>> edges;
    auto id = [](int i, int j) { return 4 * j + i; };
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < 4; ++i) edges.emplace_back(id(i, j), id((i + 1) % 4, j));
        if (j + 1 < k)
            for (int i = 0; i < 4; ++i) edges.emplace_back(id(i, j), id(i, j + 1));
    }
    return Graph(4 * k, edges);
}

Graph gen_random_tree(int n, Rng& rng) {
    if (n < 1) throw BadInput("gen_random_tree: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v))), v);
    return Graph(n, edges);
}

Graph gen_random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

namespace {

// Triangulates the polygon chain lo..hi (an edge or diagonal lo-hi closes
// it): picks a random apex, emits the two cut diagonals, recurses.
void triangulate(int lo, int hi, Rng& rng, std::vector<std::pair<int, int>>& edges,
                 std::vector<std::array<int, 3>>& triangles) {
    if (hi - lo < 2) return;
    int apex = lo + 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi - lo - 1)));
    if (apex > lo + 1) edges.emplace_back(lo, apex);
    if (apex < hi - 1) edges.emplace_back(apex, hi);
    triangles.push_back({lo, apex, hi});
    triangulate(lo, apex, rng, edges, triangles);
    triangulate(apex, hi, rng, edges, triangles);
}

}  // namespace

Graph gen_maximal_outerplanar(int n, Rng& rng, OuterplanarCert* cert) {
    if (n < 1) throw BadInput("gen_maximal_outerplanar: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> triangles;
    if (n == 2) edges.emplace_back(0, 1);
    if (n >= 3) {
        for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
        edges.emplace_back(0, n - 1);
        triangulate(0, n - 1, rng, edges, triangles);
    }
    if (cert) {
        cert->outer_cycle.resize(n);
        std::iota(cert->outer_cycle.begin(), cert->outer_cycle.end(), 0);
        cert->triangles = triangles;
    }
    return Graph(n, edges);
}

Graph gen_maximal_planar(int n, Rng& rng, PlanarCert* cert) {
    if (n < 3) throw BadInput("gen_maximal_planar: need n >= 3");
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}};
    if (n >= 4) faces.push_back({0, 1, 2});  // both sides of the starting triangle
    for (int v = 3; v < n; ++v) {
        std::size_t fi = rng.next_below(faces.size());
        std::array<int, 3> f = faces[fi];
        for (int u : f) edges.emplace_back(u, v);
        faces[fi] = {f[0], f[1], v};
        faces.push_back({f[0], f[2], v});
        faces.push_back({f[1], f[2], v});
    }
    if (cert) cert->faces = faces;
    return Graph(n, edges);
}

}  // namespace slowcol
