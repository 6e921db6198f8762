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

#include "slowcol/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

namespace slowcol {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw BadInput("negative vertex count");
    adj_.assign(n, VertexSet(n));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadInput("edge endpoint out of range: (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
        if (u == v) throw BadInput("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (adj_[u].contains(v))
            throw BadInput("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u].add(v);
        adj_[v].add(u);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

VertexSet InducedSubgraph::map_down(const VertexSet& parent_set) const {
    VertexSet out(graph.n());
    for (int v : parent_set) {
        int s = from_parent[v];
        if (s >= 0) out.add(s);
    }
    return out;
}

VertexSet InducedSubgraph::map_up(const VertexSet& sub_set) const {
    VertexSet out(static_cast<int>(from_parent.size()));
    for (int v : sub_set) out.add(to_parent[v]);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.ground() != g.n()) throw BadInput("induced_subgraph: set over wrong ground");
    InducedSubgraph out;
    out.from_parent.assign(g.n(), -1);
    for (int v : keep) {
        out.from_parent[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int su = out.from_parent[u];
        int sv = out.from_parent[v];
        if (su >= 0 && sv >= 0) edges.emplace_back(su, sv);
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    if (within.ground() != g.n()) throw BadInput("connected_components: set over wrong ground");
    std::vector<VertexSet> comps;
    VertexSet seen(g.n());
    for (int start : within) {
        if (seen.contains(start)) continue;
        VertexSet comp(g.n());
        std::queue<int> q;
        q.push(start);
        seen.add(start);
        comp.add(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (within.contains(w) && !seen.contains(w)) {
                    seen.add(w);
                    comp.add(w);
                    q.push(w);
                }
            }
        }
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g, const VertexSet& within) {
    if (within.empty()) return true;
    return connected_components(g, within).size() == 1;
}

bool is_forest(const Graph& g, const VertexSet& within) {
    // A graph is a forest iff every component has one more vertex than edges.
    int vertices = within.size();
    int edges = 0;
    for (auto [u, v] : g.edges())
        if (within.contains(u) && within.contains(v)) ++edges;
    int comps = static_cast<int>(connected_components(g, within).size());
    return edges == vertices - comps;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

Ordering degeneracy_ordering(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    // Lazy priority queue: stale entries are skipped on pop. (degree, id)
    // ordering makes ties deterministic in favor of the smaller id.
    using Entry = std::pair<int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pq.emplace(deg[v], v);
    }
    std::vector<int> removal;
    removal.reserve(n);
    int k = 0;
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (removed[v] || d != deg[v]) continue;
        removed[v] = true;
        removal.push_back(v);
        k = std::max(k, d);
        for (int w : g.neighbors(v)) {
            if (!removed[w]) {
                --deg[w];
                pq.emplace(deg[w], w);
            }
        }
    }
    Ordering out;
    out.order.assign(removal.rbegin(), removal.rend());
    out.back_degree = k;
    return out;
}

int degeneracy(const Graph& g) { return degeneracy_ordering(g).back_degree; }

namespace {

// Iterative biconnected-component walk over G[marked]. Marks every vertex
// that belongs to a block with >= 2 edges (equivalently, lies on a cycle).
void mark_cycle_vertices(const Graph& g, const VertexSet& marked, VertexSet& on_cycle) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        int iter;  // next neighbor candidate: iterate via next_after
    };

    for (int root : marked) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int w = g.neighbors(f.v).next_after(f.iter);
            // Skip neighbors outside the marked set.
            while (w != -1 && !marked.contains(w)) w = g.neighbors(f.v).next_after(w);
            if (w == -1) {
                // f.v finished; fold into parent.
                int v = f.v;
                int parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        // Pop the block whose last tree edge is (parent, v).
                        int block_edges = 0;
                        VertexSet block(n);
                        while (!edge_stack.empty()) {
                            auto [a, b] = edge_stack.back();
                            edge_stack.pop_back();
                            ++block_edges;
                            block.add(a);
                            block.add(b);
                            if (a == parent && b == v) break;
                        }
                        if (block_edges >= 2) on_cycle |= block;
                    }
                }
                continue;
            }
            f.iter = w;
            if (w == f.parent) continue;
            if (disc[w] == -1) {
                edge_stack.emplace_back(f.v, w);
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, -1});
            } else if (disc[w] < disc[f.v]) {
                edge_stack.emplace_back(f.v, w);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        }
    }
}

}  // namespace

std::pair<VertexSet, VertexSet> cycle_split(const Graph& g, const VertexSet& marked) {
    if (marked.ground() != g.n()) throw BadInput("cycle_split: set over wrong ground");
    VertexSet on_cycle(g.n());
    mark_cycle_vertices(g, marked, on_cycle);
    return {marked - on_cycle, on_cycle};
}

namespace {

int degree_within(const Graph& g, const VertexSet& q, int v) {
    return (g.neighbors(v) & q).size();
}

}  // namespace

std::vector<int> path_order(const Graph& g, const VertexSet& q) {
    if (q.empty()) throw BadInput("path_order: empty set");
    if (!is_connected(g, q)) throw BadInput("path_order: not connected");
    if (q.size() == 1) return {q.first()};
    int start = -1;
    for (int v : q) {
        int d = degree_within(g, q, v);
        if (d > 2) throw BadInput("path_order: vertex of degree > 2");
        if (d == 1 && start == -1) start = v;  // smallest-id endpoint
    }
    if (start == -1) throw BadInput("path_order: no endpoint (cycle?)");
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < q.size()) {
        int nxt = -1;
        for (int w : g.neighbors(cur)) {
            if (q.contains(w) && w != prev) {
                nxt = w;
                break;
            }
        }
        if (nxt == -1) throw BadInput("path_order: not a path");
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

std::vector<int> cycle_order(const Graph& g, const VertexSet& q) {
    if (q.size() < 3) throw BadInput("cycle_order: too few vertices");
    if (!is_connected(g, q)) throw BadInput("cycle_order: not connected");
    for (int v : q)
        if (degree_within(g, q, v) != 2) throw BadInput("cycle_order: not a cycle");
    int start = q.first();
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < q.size()) {
        int nxt = -1;
        for (int w : g.neighbors(cur)) {
            if (q.contains(w) && w != prev) {
                nxt = w;
                break;
            }
        }
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

VertexSet max_independent_path_cycle(const Graph& g, const VertexSet& q,
                                     std::optional<int> path_start) {
    bool cycle = !q.empty() && q.size() >= 3;
    if (cycle) {
        for (int v : q)
            if (degree_within(g, q, v) != 2) {
                cycle = false;
                break;
            }
        if (cycle) cycle = is_connected(g, q);
    }
    VertexSet out(g.n());
    if (cycle) {
        if (path_start) throw BadInput("max_independent_path_cycle: start given for a cycle");
        std::vector<int> order = cycle_order(g, q);
        int take = static_cast<int>(order.size()) / 2;
        for (int i = 0; i < take; ++i) out.add(order[2 * i]);
        return out;
    }
    std::vector<int> order = path_order(g, q);
    if (path_start) {
        if (*path_start == order.back()) {
            std::reverse(order.begin(), order.end());
        } else if (*path_start != order.front()) {
            throw BadInput("max_independent_path_cycle: start is not an endpoint");
        }
    }
    for (std::size_t i = 0; i < order.size(); i += 2) out.add(order[i]);
    return out;
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_line(header)) throw BadInput("graph text: missing header");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw BadInput("graph text: bad header: " + header);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_line(el)) throw BadInput("graph text: fewer edges than declared");
        std::istringstream es(el);
        long long u, v;
        if (!(es >> u >> v)) throw BadInput("graph text: bad edge line: " + el);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

void write_graph_text(const Graph& g, std::ostream& out) {
    out << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace slowcol
