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

#include "slowcol/potential.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <utility>

#include "slowcol/errors.hpp"

namespace slowcol {

PotentialSpec PotentialSpec::four_colorable() {
    return {PotentialClass::FourColorable, Q15::from_fifths(3), 4};
}

PotentialSpec PotentialSpec::outerplanar() {
    return {PotentialClass::Outerplanar, Q15::from_thirds(1), 3};
}

namespace {

bool in_triangle(const Graph& g, int v) {
    const VertexSet& nb = g.neighbors(v);
    for (int u : nb)
        if (nb.intersects(g.neighbors(u))) return true;
    return false;
}

}  // namespace

Q15 PotentialSpec::vertex(const Graph& g, int v) const {
    int d = g.degree(v);
    if (cls == PotentialClass::FourColorable) return Q15::from_fifths(5 + std::min(d, 3));
    if (d == 0) return Q15::from_int(1);
    if (d >= 3 || in_triangle(g, v)) return Q15::from_thirds(5);
    return Q15::from_thirds(4);
}

Q15 total_potential(const Graph& g, const PotentialSpec& spec) {
    Q15 total = g.m() * spec.edge;
    for (int v = 0; v < g.n(); ++v) total += spec.vertex(g, v);
    return total;
}

namespace {

void check_mark_pair(const Graph& g, const VertexSet& m, const VertexSet& x) {
    if (m.ground() != g.n() || x.ground() != g.n())
        throw BadInput("sets over a different ground than the graph");
    if (!x.subset_of(m)) throw BadInput("colored set must be inside the mark");
    if (!is_independent(g, x)) throw BadInput("colored set must be independent");
}

}  // namespace

Q15 utility(const Graph& g, const PotentialSpec& spec, const VertexSet& m, const VertexSet& x) {
    check_mark_pair(g, m, x);
    InducedSubgraph rest = induced_subgraph(g, g.vertices() - x);
    return total_potential(g, spec) - total_potential(rest.graph, spec) -
           Q15::from_int(m.size());
}

Q15 vertex_utility(const Graph& g, const PotentialSpec& spec, const VertexSet& m,
                   const VertexSet& x, int v) {
    check_mark_pair(g, m, x);
    if (x.contains(v)) return spec.vertex(g, v) + g.degree(v) * spec.edge - Q15::from_int(1);
    InducedSubgraph rest = induced_subgraph(g, g.vertices() - x);
    Q15 drop = spec.vertex(g, v) - spec.vertex(rest.graph, rest.from_parent[v]);
    if (m.contains(v)) return drop - Q15::from_int(1);
    return drop;
}

namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Slot structure shared by good_coloring: every vertex of m maps to a slot,
// cycle vertices each to their own, tree-components to a pair of slots by
// bipartition parity with attaching cycle vertices merged into the opposite
// slot. A proper coloring of the quotient graph over merged slots is exactly
// a good coloring.
struct SlotMap {
    std::vector<int> slot;    // per vertex, -1 outside m
    std::vector<int> parity;  // per tree vertex
    Dsu dsu;
    int count;

    SlotMap(const Graph& g, const VertexSet& m, const VertexSet& trees,
            const std::vector<VertexSet>& tree_comps)
        : slot(g.n(), -1), parity(g.n(), -1), dsu(0), count(0) {
        for (int v : m - trees) slot[v] = count++;

        std::vector<std::pair<int, int>> comp_slots;
        for (const VertexSet& comp : tree_comps) {
            int even_slot = count++;
            int odd_slot = count++;
            comp_slots.emplace_back(even_slot, odd_slot);
            std::deque<int> queue{comp.first()};
            parity[comp.first()] = 0;
            slot[comp.first()] = even_slot;
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int w : g.neighbors(v) & comp) {
                    if (parity[w] != -1) continue;
                    parity[w] = 1 - parity[v];
                    slot[w] = parity[w] == 0 ? even_slot : odd_slot;
                    queue.push_back(w);
                }
            }
        }

        dsu = Dsu(count);
        for (std::size_t ci = 0; ci < tree_comps.size(); ++ci) {
            const VertexSet& comp = tree_comps[ci];
            for (int t : comp) {
                for (int nb : g.neighbors(t) & m) {
                    if (comp.contains(nb)) continue;
                    if (trees.contains(nb))
                        throw TheoryViolation("edge joins two tree-components");
                    int opposite = parity[t] == 0 ? comp_slots[ci].second : comp_slots[ci].first;
                    dsu.unite(slot[nb], opposite);
                }
            }
        }
    }

    int root_of(int v) { return dsu.find(slot[v]); }
};

}  // namespace

Coloring good_coloring(const Graph& g, const VertexSet& m, int k) {
    if (m.ground() != g.n()) throw BadInput("mark over a different ground than the graph");
    if (m.empty()) throw BadInput("mark is empty");
    if (k < 1) throw BadInput("need at least one color");
    if (!is_connected(g, m)) throw BadInput("marked set must be connected");

    auto [trees, cycles] = cycle_split(g, m);
    std::vector<VertexSet> tree_comps = connected_components(g, trees);
    SlotMap slots(g, m, trees, tree_comps);

    std::vector<int> dense(slots.count, -1);
    int qn = 0;
    for (int v : m) {
        int r = slots.root_of(v);
        if (dense[r] < 0) dense[r] = qn++;
    }

    bool self_loop = false;
    std::vector<std::pair<int, int>> qedges;
    for (int u : m) {
        for (int v : g.neighbors(u) & m) {
            if (u >= v) continue;
            int ru = dense[slots.root_of(u)];
            int rv = dense[slots.root_of(v)];
            if (ru == rv) {
                self_loop = true;
            } else {
                qedges.emplace_back(std::min(ru, rv), std::max(ru, rv));
            }
        }
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());

    if (!self_loop) {
        Graph quotient(qn, qedges);
        if (std::optional<Coloring> qc = proper_coloring(quotient, k)) {
            Coloring out(m, k);
            for (int v : m) out.color_of[v] = qc->color_of[dense[slots.root_of(v)]];
            return out;
        }
    }

    // The construction failing for a k-colorable connected mark would
    // contradict the guarantee this painter is built on.
    if (proper_coloring(induced_subgraph(g, m).graph, k))
        throw TheoryViolation("no good coloring found for a k-colorable connected mark");
    throw BadInput("marked subgraph is not " + std::to_string(k) + "-colorable");
}

bool is_good_coloring(const Graph& g, const VertexSet& m, const Coloring& coloring) {
    if (coloring.domain != m) return false;
    if (!is_proper(g, coloring)) return false;

    auto [trees, cycles] = cycle_split(g, m);
    for (const VertexSet& comp : connected_components(g, trees)) {
        VertexSet block = comp;
        for (int t : comp) block |= g.neighbors(t) & m;
        int seen = 0;
        int count = 0;
        for (int v : block) {
            int bit = 1 << coloring.color_of[v];
            if (!(seen & bit)) {
                seen |= bit;
                ++count;
            }
        }
        if (count > 2) return false;
    }
    return true;
}

namespace {

VertexSet degree_filtered(const Graph& g, const VertexSet& m, const VertexSet& within) {
    VertexSet p(g.n());
    for (int v : within)
        if ((g.neighbors(v) & m).size() <= 2) p.add(v);
    return p;
}

void check_augmented(const Graph& g, const VertexSet& m, const AugmentedClasses& aug) {
    VertexSet covered(g.n());
    for (const VertexSet& cls : aug.classes) {
        if (!is_independent(g, cls)) throw TheoryViolation("augmented class is not independent");
        covered |= cls;
    }
    if (!m.subset_of(covered)) throw TheoryViolation("augmented classes do not cover the mark");
}

}  // namespace

AugmentedClasses augment_four_colorable(const Graph& g, const VertexSet& m,
                                        const Coloring& coloring) {
    if (coloring.k != 4) throw BadInput("augmentation needs a 4-coloring");
    if (!is_good_coloring(g, m, coloring)) throw BadInput("not a good coloring of the mark");

    AugmentedClasses aug;
    std::vector<VertexSet> base;
    for (int i = 0; i < 4; ++i) {
        base.push_back(coloring.class_of(i));
        aug.classes.push_back(base.back());
    }

    VertexSet p = degree_filtered(g, m, m);
    for (const VertexSet& q : connected_components(g, p)) {
        // Additions are checked against the base classes: the chosen set is
        // independent, so the order of additions cannot matter.
        for (int v : max_independent_path_cycle(g, q)) {
            for (int i = 0; i < 4; ++i) {
                if (base[i].contains(v)) continue;
                if (base[i].intersects(g.neighbors(v) & m)) continue;
                aug.classes[i].add(v);
                aug.added.emplace_back(v, i);
            }
        }
    }
    check_augmented(g, m, aug);
    return aug;
}

AugmentedClasses augment_outerplanar(const Graph& g, const VertexSet& m,
                                     const Coloring& coloring) {
    if (coloring.k != 3) throw BadInput("augmentation needs a 3-coloring");
    if (m.size() < 2) throw BadInput("augmentation needs at least two marked vertices");
    if (!is_good_coloring(g, m, coloring)) throw BadInput("not a good coloring of the mark");

    AugmentedClasses aug;
    for (int i = 0; i < 3; ++i) aug.classes.push_back(coloring.class_of(i));

    auto [trees, cycles] = cycle_split(g, m);
    std::vector<VertexSet> tree_comps = connected_components(g, trees);

    // Missing color per tree-component block. The block (the component plus
    // its neighbors inside m) is a tree on >= 2 vertices colored with exactly
    // two colors; both facts are consequences of the no-cycle split and the
    // good coloring, so violations are internal errors.
    std::vector<int> missing(tree_comps.size(), -1);
    std::vector<int> comp_of(g.n(), -1);
    for (std::size_t ci = 0; ci < tree_comps.size(); ++ci) {
        const VertexSet& comp = tree_comps[ci];
        for (int v : comp) comp_of[v] = static_cast<int>(ci);
        VertexSet block = comp;
        for (int t : comp) block |= g.neighbors(t) & m;
        if (block.size() < 2) throw TheoryViolation("tree-component block has a single vertex");
        if (!is_forest(g, block)) throw TheoryViolation("tree-component block contains a cycle");
        int seen = 0;
        for (int v : block) seen |= 1 << coloring.color_of[v];
        if (std::popcount(static_cast<unsigned>(seen)) != 2)
            throw TheoryViolation("tree-component block does not use exactly two colors");
        missing[ci] = std::countr_zero(static_cast<unsigned>(~seen & 0b111));
    }

    VertexSet p = degree_filtered(g, m, trees);
    for (const VertexSet& q : connected_components(g, p)) {
        std::vector<int> order = path_order(g, q);
        int z = missing[comp_of[q.first()]];
        std::size_t start = 0;
        if (g.degree(order.front()) < 2) start = (order.size() - 1) % 2;
        for (std::size_t i = start; i < order.size(); i += 2) {
            aug.classes[z].add(order[i]);
            aug.added.emplace_back(order[i], z);
        }
    }
    check_augmented(g, m, aug);
    return aug;
}

namespace {

class PotentialPainter final : public Painter {
public:
    PotentialPainter(PotentialSpec spec, bool record_debug) : spec_(spec), record_(record_debug) {}

    std::string name() const override {
        return spec_.cls == PotentialClass::FourColorable ? "potential-4col"
                                                          : "potential-outerplanar";
    }

    void init(const Graph& g) override {
        if (spec_.cls == PotentialClass::FourColorable && !proper_coloring(g, 4))
            throw BadInput("potential painter needs a 4-colorable graph");
        base_ = g;
        debug_.clear();
        rounds_ = 0;
    }

    VertexSet respond(const VertexSet& uncolored, const VertexSet& marked,
                      std::span<const Round>) override {
        InducedSubgraph start = induced_subgraph(base_, uncolored);
        Q15 phi_before = total_potential(start.graph, spec_);

        // Components are fixed up front; removing one component's chosen
        // class never touches another component's vertices or edges, so each
        // later component is intact in the shrunken graph and the potential
        // drops telescope across the loop.
        std::vector<VertexSet> comps;
        for (const VertexSet& c : connected_components(start.graph, start.map_down(marked)))
            comps.push_back(start.map_up(c));

        PotentialRoundDebug dbg;
        dbg.round = ++rounds_;
        dbg.marked = marked.size();
        dbg.phi_before = phi_before;

        VertexSet alive = uncolored;
        VertexSet chosen(base_.n());
        for (const VertexSet& comp : comps) {
            InducedSubgraph sub = induced_subgraph(base_, alive);
            VertexSet c = sub.map_down(comp);

            VertexSet best;
            int best_class = -1;
            Q15 best_utility;
            if (c.size() == 1) {
                best = c;
                best_utility = utility(sub.graph, spec_, c, c);
            } else {
                Coloring col = good_coloring(sub.graph, c, spec_.k);
                AugmentedClasses aug = spec_.cls == PotentialClass::FourColorable
                                           ? augment_four_colorable(sub.graph, c, col)
                                           : augment_outerplanar(sub.graph, c, col);
                for (int i = 0; i < spec_.k; ++i) {
                    if (aug.classes[i].empty()) continue;
                    Q15 u = utility(sub.graph, spec_, c, aug.classes[i]);
                    if (best_class < 0 || u > best_utility) {
                        best_class = i;
                        best_utility = u;
                        best = aug.classes[i];
                    }
                }
                if (best_class < 0) throw TheoryViolation("no nonempty augmented class");
            }
            if (best_utility < Q15())
                throw TheoryViolation("every augmented class has negative utility");

            VertexSet picked = sub.map_up(best);
            chosen |= picked;
            alive -= picked;
            dbg.choices.emplace_back(best_class, best_utility);
        }

        Q15 phi_after = total_potential(induced_subgraph(base_, alive).graph, spec_);
        if (Q15::from_int(marked.size()) > phi_before - phi_after)
            throw TheoryViolation("round scored more than the potential drop");
        dbg.phi_after = phi_after;
        if (record_) debug_.push_back(std::move(dbg));
        return chosen;
    }

    const std::vector<PotentialRoundDebug>& debug() const { return debug_; }

private:
    PotentialSpec spec_;
    bool record_;
    Graph base_;
    std::vector<PotentialRoundDebug> debug_;
    std::int64_t rounds_ = 0;
};

}  // namespace

std::unique_ptr<Painter> make_potential_painter(PotentialClass cls, bool record_debug) {
    PotentialSpec spec = cls == PotentialClass::FourColorable ? PotentialSpec::four_colorable()
                                                              : PotentialSpec::outerplanar();
    return std::make_unique<PotentialPainter>(spec, record_debug);
}

const std::vector<PotentialRoundDebug>& potential_debug(const Painter& painter) {
    const auto* p = dynamic_cast<const PotentialPainter*>(&painter);
    if (!p) throw BadInput("painter does not record potential diagnostics");
    return p->debug();
}

}  // namespace slowcol
