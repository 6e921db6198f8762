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

#ifndef SLOWCOL_GENERATORS_HPP
#define SLOWCOL_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "slowcol/graph.hpp"
#include "slowcol/rng.hpp"

namespace slowcol {

Graph gen_complete(int n);
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_edgeless(int n);

/// Star K_{1,n-1}: vertex 0 is the center.
Graph gen_star(int n);

/// Complete multipartite graph; part i occupies a consecutive id range, in
/// the order given. Zero part sizes are rejected.
Graph gen_complete_multipartite(const std::vector<int>& part_sizes);

/// Parts of gen_complete_multipartite as vertex sets, same id layout.
std::vector<VertexSet> multipartite_parts(const std::vector<int>& part_sizes);

/// Disjoint union; ids of the i-th summand are offset by the total size of
/// the earlier ones.
Graph gen_disjoint_union(const std::vector<Graph>& graphs);

/// Cartesian product C4 x P_k: vertex (i, j) has id 4*j + i; layer j is a
/// 4-cycle, consecutive layers are matched.
Graph gen_c4_box_path(int k);

/// Uniform random attachment tree: vertex i >= 1 picks a parent below i.
Graph gen_random_tree(int n, Rng& rng);

/// Erdos-Renyi-style random graph, each pair independently with probability p.
Graph gen_random_graph(int n, double p, Rng& rng);

/// Maximal outerplanar graph: the polygon 0-1-...-(n-1)-0 plus a random
/// triangulation (recursive random apex). For n >= 3 it has 2n-3 edges and
/// every vertex lies in a triangle.
struct OuterplanarCert {
    std::vector<int> outer_cycle;
    std::vector<std::array<int, 3>> triangles;
};
Graph gen_maximal_outerplanar(int n, Rng& rng, OuterplanarCert* cert = nullptr);

/// Maximal planar graph grown from K4 by repeatedly placing a new vertex
/// inside a uniformly random triangular face. For n >= 3 it has 3n-6 edges.
struct PlanarCert {
    std::vector<std::array<int, 3>> faces;
};
Graph gen_maximal_planar(int n, Rng& rng, PlanarCert* cert = nullptr);

}  // namespace slowcol

#endif  // SLOWCOL_GENERATORS_HPP
