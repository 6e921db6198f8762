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

#ifndef SLOWCOL_GRAPH_HPP
#define SLOWCOL_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "slowcol/vertex_set.hpp"

namespace slowcol {

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() : n_(0) {}

    /// Validates ids, rejects loops, deduplicates nothing: a repeated edge is
    /// treated as caller error and throws.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }

    /// Edge list with u < v, ascending lexicographic.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet vertices() const { return VertexSet::full(n_); }

private:
    int n_;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Result of taking the subgraph induced by a vertex subset. Vertices are
/// renumbered densely in ascending original-id order.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;    // sub id -> original id
    std::vector<int> from_parent;  // original id -> sub id, -1 outside

    VertexSet map_down(const VertexSet& parent_set) const;  // parent ids -> sub ids
    VertexSet map_up(const VertexSet& sub_set) const;       // sub ids -> parent ids
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components of G[within], each a subset of `within`, ordered by
/// smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

bool is_connected(const Graph& g, const VertexSet& within);

/// True when G[within] has no cycle.
bool is_forest(const Graph& g, const VertexSet& within);

/// True when no two members are adjacent.
bool is_independent(const Graph& g, const VertexSet& s);

/// Vertex order in which every vertex has at most `back_degree` neighbors
/// earlier in the sequence; back_degree is the smallest value for which such
/// an order exists (the degeneracy).
struct Ordering {
    std::vector<int> order;
    int back_degree = 0;
};

/// Greedy minimum-degree removal, reversed. Ties go to the smallest id.
Ordering degeneracy_ordering(const Graph& g);

int degeneracy(const Graph& g);

/// Splits the marked set by cycle membership inside G[marked]:
/// first = vertices on no cycle of G[marked], second = the rest.
/// Computed from the biconnected components of G[marked]: a vertex lies on a
/// cycle exactly when one of its blocks has at least two edges.
std::pair<VertexSet, VertexSet> cycle_split(const Graph& g, const VertexSet& marked);

/// Vertices of a path component of G[q], ordered end to end. When both ends
/// qualify the endpoint with the smaller id comes first. Throws BadInput if
/// G[q] is not a path.
std::vector<int> path_order(const Graph& g, const VertexSet& q);

/// Vertices of a cycle component of G[q] in cyclic order, starting at the
/// smallest id and stepping first to its smaller-id neighbor. Throws BadInput
/// if G[q] is not a cycle.
std::vector<int> cycle_order(const Graph& g, const VertexSet& q);

/// A maximum independent subset of G[q], which must be a path or a cycle.
/// Paths alternate starting from `path_start` when given (must be an
/// endpoint), otherwise from the smaller-id endpoint. Cycles alternate in
/// cycle_order, giving floor(|q|/2) vertices.
VertexSet max_independent_path_cycle(const Graph& g, const VertexSet& q,
                                     std::optional<int> path_start = std::nullopt);

/// Text format: first line "n m", then m lines "u v" with 0-based ids,
/// LF line endings, edges ascending lexicographic on output.
Graph read_graph_text(std::istream& in);
void write_graph_text(const Graph& g, std::ostream& out);

}  // namespace slowcol

#endif  // SLOWCOL_GRAPH_HPP
