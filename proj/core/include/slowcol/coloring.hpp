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

#ifndef SLOWCOL_COLORING_HPP
#define SLOWCOL_COLORING_HPP

#include <optional>
#include <vector>

#include "slowcol/graph.hpp"

namespace slowcol {

/// Assignment of colors 0..k-1 to the vertices of a domain. Vertices outside
/// the domain carry -1.
struct Coloring {
    VertexSet domain;
    std::vector<int> color_of;
    int k = 0;

    Coloring() = default;
    Coloring(VertexSet dom, int colors)
        : domain(std::move(dom)), color_of(domain.ground(), -1), k(colors) {}

    int operator[](int v) const { return color_of[v]; }

    /// Members of one color class.
    VertexSet class_of(int color) const {
        VertexSet s(domain.ground());
        for (int v : domain)
            if (color_of[v] == color) s.add(v);
        return s;
    }
};

/// True when no edge of G[domain] joins two equal colors and every domain
/// vertex has a color in range.
bool is_proper(const Graph& g, const Coloring& c);

/// True when c is proper and no two color classes induce a cycle together.
bool is_acyclic_coloring(const Graph& g, const Coloring& c);

/// Proper k-coloring of all of g by backtracking, or nullopt. Vertices are
/// chosen first-fail (fewest remaining colors, then smallest id); colors are
/// tried in ascending order, so the result is deterministic.
std::optional<Coloring> proper_coloring(const Graph& g, int k);

/// Like proper_coloring but every pair of color classes must induce a forest.
std::optional<Coloring> acyclic_coloring(const Graph& g, int k);

}  // namespace slowcol

#endif  // SLOWCOL_COLORING_HPP
