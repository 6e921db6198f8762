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

#include "slowcol/coloring.hpp"

#include <bit>
#include <cstdint>

namespace slowcol {

bool is_proper(const Graph& g, const Coloring& c) {
    for (int v : c.domain)
        if (c.color_of[v] < 0 || c.color_of[v] >= c.k) return false;
    for (auto [u, v] : g.edges())
        if (c.domain.contains(u) && c.domain.contains(v) && c.color_of[u] == c.color_of[v])
            return false;
    return true;
}

bool is_acyclic_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    for (int a = 0; a < c.k; ++a) {
        for (int b = a + 1; b < c.k; ++b) {
            VertexSet pair = c.class_of(a) | c.class_of(b);
            if (!is_forest(g, pair)) return false;
        }
    }
    return true;
}

namespace {

// Shared backtracking skeleton. `accept(v, color)` may veto an assignment
// that is proper but violates an extra constraint; it sees the partial
// coloring through the captured state.
struct Backtracker {
    const Graph& g;
    int k;
    Coloring coloring;
    std::vector<std::uint32_t> forbidden;  // bitmask of colors blocked by neighbors

    Backtracker(const Graph& graph, int colors)
        : g(graph), k(colors), coloring(graph.vertices(), colors), forbidden(graph.n(), 0) {}

    int pick_vertex() const {
        int best = -1, best_free = k + 1;
        for (int v = 0; v < g.n(); ++v) {
            if (coloring.color_of[v] != -1) continue;
            int free = k - std::popcount(forbidden[v] & ((1u << k) - 1));
            if (free < best_free) {
                best_free = free;
                best = v;
            }
        }
        return best;
    }

    template <class Accept>
    bool solve(int remaining, const Accept& accept) {
        if (remaining == 0) return true;
        int v = pick_vertex();
        std::uint32_t blocked = forbidden[v];
        for (int c = 0; c < k; ++c) {
            if ((blocked >> c) & 1u) continue;
            coloring.color_of[v] = c;
            if (accept(v, c)) {
                std::vector<std::pair<int, std::uint32_t>> undo;
                for (int w : g.neighbors(v)) {
                    if (coloring.color_of[w] == -1 && !((forbidden[w] >> c) & 1u)) {
                        undo.emplace_back(w, forbidden[w]);
                        forbidden[w] |= 1u << c;
                    }
                }
                if (solve(remaining - 1, accept)) return true;
                for (auto& [w, mask] : undo) forbidden[w] = mask;
            }
            coloring.color_of[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> proper_coloring(const Graph& g, int k) {
    if (k < 0) throw BadInput("proper_coloring: negative k");
    if (g.n() == 0) return Coloring(g.vertices(), k);
    if (k == 0) return std::nullopt;
    Backtracker bt(g, k);
    if (bt.solve(g.n(), [](int, int) { return true; })) return bt.coloring;
    return std::nullopt;
}

std::optional<Coloring> acyclic_coloring(const Graph& g, int k) {
    if (k < 0) throw BadInput("acyclic_coloring: negative k");
    if (g.n() == 0) return Coloring(g.vertices(), k);
    if (k == 0) return std::nullopt;
    Backtracker bt(g, k);
    // After assigning color c to v, a new bichromatic cycle must pass through
    // v, so it suffices to re-check forest-ness of the (c, c') classes among
    // currently colored vertices for each other color c'.
    auto accept = [&](int v, int c) {
        for (int other = 0; other < k; ++other) {
            if (other == c) continue;
            VertexSet pair(g.n());
            for (int w = 0; w < g.n(); ++w) {
                int cw = bt.coloring.color_of[w];
                if (cw == c || cw == other) pair.add(w);
            }
            if (!pair.contains(v)) pair.add(v);
            if (!is_forest(g, pair)) return false;
        }
        return true;
    };
    if (bt.solve(g.n(), accept)) return bt.coloring;
    return std::nullopt;
}

}  // namespace slowcol
