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

#include "slowcol/verify.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "slowcol/decompose.hpp"
#include "slowcol/errors.hpp"
#include "slowcol/game.hpp"
#include "slowcol/generators.hpp"
#include "slowcol/potential.hpp"
#include "slowcol/rng.hpp"
#include "slowcol/solver.hpp"
#include "slowcol/strategies.hpp"

namespace slowcol {

int SuiteReport::failures() const {
    int count = 0;
    for (const InstanceRecord& r : instances)
        if (!r.pass) ++count;
    return count;
}

namespace {

// Slack for bounds that contain square roots; scores are integers and the
// bounds at suite scale are nowhere near this close to an integer from
// below, so the slack can only forgive representation error, not a real
// violation.
constexpr double kSlack = 1e-9;

InstanceRecord record(const SuiteReport& rep, std::string group, std::string id, const Graph& g,
                      std::string check, double bound, std::int64_t observed, bool pass,
                      std::string detail = "") {
    InstanceRecord r;
    r.suite = rep.suite;
    r.group = std::move(group);
    r.id = std::move(id);
    r.n = g.n();
    r.m = g.m();
    r.check = std::move(check);
    r.bound = bound;
    r.observed = observed;
    r.pass = pass;
    r.detail = std::move(detail);
    return r;
}

std::string list_to_string(const std::vector<int>& parts) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

void descending_partitions(int total, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        descending_partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partition_lists(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int total = 1; total <= max_total; ++total)
        descending_partitions(total, total, cur, out);
    return out;
}

std::int64_t play_vs_optimal(const Graph& g, Painter& painter,
                             const std::shared_ptr<const ExactSolver>& solver) {
    std::unique_ptr<Lister> lister = make_optimal_lister(solver);
    return play(g, *lister, painter).final_score;
}

/// Keeps each edge of g independently with probability keep.
Graph drop_edges(const Graph& g, double keep, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges())
        if (rng.next_bool(keep)) edges.push_back(e);
    return Graph(g.n(), edges);
}

/// Connected set grown from a random start by random frontier picks.
VertexSet random_connected_set(const Graph& g, Rng& rng) {
    int start = static_cast<int>(rng.next_below(g.n()));
    std::int64_t target = 1 + static_cast<std::int64_t>(rng.next_below(g.n()));
    VertexSet in(g.n());
    in.add(start);
    std::vector<int> frontier = g.neighbors(start).to_vector();
    while (in.size() < target && !frontier.empty()) {
        std::size_t i = rng.next_below(frontier.size());
        int v = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        if (in.contains(v)) continue;
        in.add(v);
        for (int w : g.neighbors(v))
            if (!in.contains(w)) frontier.push_back(w);
    }
    return in;
}

std::unique_ptr<Lister> random_round_lister(Rng& rng, int game) {
    if (game % 2 == 0) return make_random_lister(rng.next_u64(), 0.2 + 0.6 * rng.next_double());
    return make_connected_random_lister(rng.next_u64());
}

/// Random forest on the vertices of `on`: random attachment tree with edges
/// then thinned independently.
void add_random_forest(const VertexSet& on, double keep, Rng& rng,
                       std::vector<std::pair<int, int>>& edges) {
    std::vector<int> ids = on.to_vector();
    for (std::size_t i = 1; i < ids.size(); ++i) {
        if (!rng.next_bool(keep)) continue;
        int parent = ids[rng.next_below(i)];
        edges.emplace_back(std::min(parent, ids[i]), std::max(parent, ids[i]));
    }
}

}  // namespace

SuiteReport run_closed_forms(const SuiteOptions& opt) {
    SuiteReport rep{"closed-forms", opt.seed, {}};

    for (int n = 1; n <= 6; ++n) {
        Graph g = gen_complete(n);
        std::int64_t expect = static_cast<std::int64_t>(n) * (n + 1) / 2;
        std::int64_t got = sum_color_cost(g, opt.cap);
        rep.instances.push_back(record(rep, "complete", "complete n=" + std::to_string(n), g,
                                       "n(n+1)/2", static_cast<double>(expect), got,
                                       got == expect));
    }

    for (int n = 1; n <= 12; ++n) {
        Graph g = gen_path(n);
        std::int64_t expect = 3LL * n / 2;
        std::int64_t got = sum_color_cost(g, opt.cap);
        rep.instances.push_back(record(rep, "path", "path n=" + std::to_string(n), g,
                                       "floor(3n/2)", static_cast<double>(expect), got,
                                       got == expect));
    }

    for (int n = 2; n <= 12; ++n) {
        Graph g = gen_star(n);
        std::int64_t expect = n + max_triangular_below(n - 1);
        std::int64_t got = sum_color_cost(g, opt.cap);
        rep.instances.push_back(record(rep, "star", "star n=" + std::to_string(n), g,
                                       "n + max triangular t(t+1)/2 <= n-1",
                                       static_cast<double>(expect), got, got == expect));
    }

    for (int k = 2; k <= 3; ++k) {
        Graph g = gen_c4_box_path(k);
        std::int64_t n = g.n();
        std::int64_t expect = 7 * n / 4 - 1;
        std::int64_t got = sum_color_cost(g, opt.cap);
        rep.instances.push_back(record(rep, "c4xpath", "c4xpath k=" + std::to_string(k), g,
                                       "7n/4 - 1", static_cast<double>(expect), got,
                                       got == expect));
    }

    for (int k = 2; k <= 3; ++k) {
        for (int copies = 1; (k + 1) * copies <= 12; ++copies) {
            std::vector<Graph> pieces(copies, gen_complete(k + 1));
            Graph g = gen_disjoint_union(pieces);
            Rat expect = Rat(k, 2) + Rat(1);
            std::int64_t target = (expect * Rat(g.n())).floor();
            std::int64_t got = sum_color_cost(g, opt.cap);
            rep.instances.push_back(record(
                rep, "disjoint-cliques",
                "cliques k=" + std::to_string(k) + " copies=" + std::to_string(copies), g,
                "(k/2+1)n", static_cast<double>(target), got, got == target));
        }
    }
    return rep;
}

SuiteReport run_monotonicity(const SuiteOptions& opt) {
    SuiteReport rep{"monotonicity", opt.seed, {}};
    Rng rng(opt.seed ^ 0x6d6f6e6f746f6e65ULL);

    for (int i = 0; i < opt.monotone_pairs; ++i) {
        int n = 4 + static_cast<int>(rng.next_below(6));
        Graph g = gen_random_graph(n, 0.15 + 0.7 * rng.next_double(), rng);
        VertexSet keep(n);
        while (keep.empty())
            for (int v = 0; v < n; ++v)
                if (rng.next_bool(0.5)) keep.add(v);
        std::int64_t outer = sum_color_cost(g, opt.cap);
        std::int64_t inner = sum_color_cost(induced_subgraph(g, keep).graph, opt.cap);
        rep.instances.push_back(record(rep, "induced-subgraph", "pair " + std::to_string(i), g,
                                       "score(G[U]) <= score(G)", static_cast<double>(outer),
                                       inner, inner <= outer));
    }

    for (int i = 0; i < opt.additive_pairs; ++i) {
        int n1 = 1 + static_cast<int>(rng.next_below(6));
        int n2 = 1 + static_cast<int>(rng.next_below(6));
        Graph g1 = gen_random_graph(n1, 0.2 + 0.6 * rng.next_double(), rng);
        Graph g2 = gen_random_graph(n2, 0.2 + 0.6 * rng.next_double(), rng);
        Graph un = gen_disjoint_union({g1, g2});
        std::int64_t expect = sum_color_cost(g1, opt.cap) + sum_color_cost(g2, opt.cap);
        std::int64_t got = sum_color_cost(un, opt.cap);
        rep.instances.push_back(record(rep, "disjoint-union", "pair " + std::to_string(i), un,
                                       "score(G1+G2) == score(G1)+score(G2)",
                                       static_cast<double>(expect), got, got == expect));
    }
    return rep;
}

SuiteReport run_composite_multipartite(const SuiteOptions& opt) {
    SuiteReport rep{"composite-multipartite", opt.seed, {}};

    for (const std::vector<int>& parts : partition_lists(opt.multipartite_total)) {
        Graph g = gen_complete_multipartite(parts);
        std::vector<WeightedPart> wparts;
        for (const VertexSet& cls : multipartite_parts(parts))
            wparts.push_back({cls, independent_cost()});
        CompositePainter painter(WeightedPartition(g, wparts));

        auto solver = std::make_shared<const ExactSolver>(g, opt.cap);
        std::int64_t score = play_vs_optimal(g, painter, solver);

        std::vector<std::int64_t> sizes(parts.begin(), parts.end());
        double upper = bound_multipartite_upper(sizes);
        std::int64_t lower = bound_multipartite_lower(sizes);
        std::int64_t exact = solver->sum_color_cost();

        std::string id = "parts=" + list_to_string(parts);
        rep.instances.push_back(record(rep, "upper", id, g, "n + 2 sum sqrt(ri rj)", upper,
                                       score, static_cast<double>(score) <= upper + kSlack));
        rep.instances.push_back(record(rep, "lower", id, g, "triangular lower <= exact score",
                                       static_cast<double>(exact), lower, lower <= exact));
    }
    return rep;
}

SuiteReport run_composite_forests(const SuiteOptions& opt) {
    SuiteReport rep{"composite-forests", opt.seed, {}};
    Rng rng(opt.seed ^ 0x666f726573747332ULL);

    for (int i = 0; i < opt.forest_graphs; ++i) {
        int n = 4 + static_cast<int>(rng.next_below(7));
        VertexSet a(n), b(n);
        while (a.empty() || b.empty()) {
            a = VertexSet(n);
            b = VertexSet(n);
            for (int v = 0; v < n; ++v) (rng.next_bool(0.5) ? a : b).add(v);
        }
        std::vector<std::pair<int, int>> edges;
        add_random_forest(a, 0.75, rng, edges);
        add_random_forest(b, 0.75, rng, edges);
        double cross = 0.3 + 0.4 * rng.next_double();
        for (int u : a)
            for (int v : b)
                if (rng.next_bool(cross)) edges.emplace_back(std::min(u, v), std::max(u, v));
        Graph g(n, edges);

        std::string id = "graph " + std::to_string(i);
        if (!is_forest(g, a) || !is_forest(g, b)) {
            rep.instances.push_back(record(rep, "forest-pair", id, g, "parts induce forests", 0,
                                           1, false, "construction produced a non-forest part"));
            continue;
        }

        WeightedPartition wp(g, {{a, forest_cost()}, {b, forest_cost()}});
        double bound = wp.sqrt_sum_bound();
        CompositePainter painter(std::move(wp));
        auto solver = std::make_shared<const ExactSolver>(g, opt.cap);
        std::int64_t score = play_vs_optimal(g, painter, solver);

        bool pass = static_cast<double>(score) <= bound + kSlack &&
                    bound <= 3.0 * n + kSlack && !painter.used_fallback();
        std::string detail;
        if (bound > 3.0 * n + kSlack) detail = "sqrt-sum bound exceeds 3n";
        if (painter.used_fallback()) detail = "sub-painter fell back to greedy";
        rep.instances.push_back(
            record(rep, "forest-pair", id, g, "(sum sqrt(1.5 |Vi|))^2 <= 3n", bound, score, pass,
                   detail));
    }
    return rep;
}

SuiteReport run_potential_fourcol(const SuiteOptions& opt) {
    SuiteReport rep{"potential-4col", opt.seed, {}};
    Rng rng(opt.seed ^ 0x706c616e61723463ULL);

    for (int n = opt.planar_lo; n <= opt.planar_hi; ++n) {
        for (int r = 0; r < opt.planar_reps; ++r) {
            Graph g = gen_maximal_planar(n, rng);
            Rat bound(8 * static_cast<std::int64_t>(g.n()) + 3 * g.m(), 5);
            std::string id = "maximal-planar n=" + std::to_string(n) + " rep=" + std::to_string(r);
            try {
                auto painter = make_potential_painter(PotentialClass::FourColorable);
                auto solver = std::make_shared<const ExactSolver>(g, opt.cap);
                std::int64_t score = play_vs_optimal(g, *painter, solver);
                rep.instances.push_back(record(rep, "planar-upper", id, g, "(8n+3m)/5",
                                               bound.to_double(), score,
                                               score <= bound.floor()));
            } catch (const TheoryViolation& e) {
                rep.instances.push_back(record(rep, "planar-upper", id, g, "(8n+3m)/5",
                                               bound.to_double(), -1, false, e.what()));
            }
        }
    }

    std::int64_t total_rounds = 0;
    int game = 0;
    while (total_rounds < opt.fourcol_rounds) {
        ++game;
        int n = 5 + static_cast<int>(rng.next_below(opt.fourcol_max_n - 4));
        Graph g = drop_edges(gen_maximal_planar(n, rng), 1.0 - 0.5 * rng.next_double(), rng);
        std::string id = "game " + std::to_string(game);
        try {
            auto painter = make_potential_painter(PotentialClass::FourColorable, true);
            auto lister = random_round_lister(rng, game);
            play(g, *lister, *painter);
            std::int64_t bad = 0;
            const auto& rounds = potential_debug(*painter);
            for (const PotentialRoundDebug& d : rounds)
                if (Q15::from_int(d.marked) > d.phi_before - d.phi_after) ++bad;
            total_rounds += static_cast<std::int64_t>(rounds.size());
            rep.instances.push_back(record(rep, "round-invariant", id, g,
                                           "|M| <= potential drop, every round", 0, bad,
                                           bad == 0));
        } catch (const TheoryViolation& e) {
            rep.instances.push_back(record(rep, "round-invariant", id, g,
                                           "|M| <= potential drop, every round", 0, -1, false,
                                           e.what()));
            total_rounds += 1;  // count the failed round so the loop terminates
        }
    }
    Graph empty(0, {});
    rep.instances.push_back(record(rep, "round-invariant", "rounds covered", empty,
                                   "total rounds >= target",
                                   static_cast<double>(opt.fourcol_rounds), total_rounds,
                                   total_rounds >= opt.fourcol_rounds));
    return rep;
}

SuiteReport run_potential_outerplanar(const SuiteOptions& opt) {
    SuiteReport rep{"potential-outerplanar", opt.seed, {}};
    Rng rng(opt.seed ^ 0x6f757465727033ULL);

    for (int n = opt.outer_lo; n <= opt.outer_hi; ++n) {
        for (int r = 0; r < opt.outer_reps; ++r) {
            Graph g = gen_maximal_outerplanar(n, rng);
            Q15 phi = total_potential(g, PotentialSpec::outerplanar());
            std::string id =
                "maximal-outerplanar n=" + std::to_string(n) + " rep=" + std::to_string(r);
            bool phi_small = phi < Q15::from_thirds(7 * static_cast<std::int64_t>(n));
            try {
                auto painter = make_potential_painter(PotentialClass::Outerplanar);
                auto solver = std::make_shared<const ExactSolver>(g, opt.cap);
                std::int64_t score = play_vs_optimal(g, *painter, solver);
                rep.instances.push_back(record(rep, "mop-upper", id, g, "Phi(G) < (7/3)n",
                                               phi.to_double(), score,
                                               score <= phi.floor() && phi_small,
                                               phi_small ? "" : "potential reached (7/3)n"));
            } catch (const TheoryViolation& e) {
                rep.instances.push_back(record(rep, "mop-upper", id, g, "Phi(G) < (7/3)n",
                                               phi.to_double(), -1, false, e.what()));
            }
        }
    }

    std::int64_t total_rounds = 0;
    int game = 0;
    while (total_rounds < opt.outer_rounds) {
        ++game;
        int n = 20 + static_cast<int>(rng.next_below(opt.outer_max_n - 19));
        Graph g = drop_edges(gen_maximal_outerplanar(n, rng), 1.0 - 0.4 * rng.next_double(), rng);
        std::string id = "game " + std::to_string(game);
        try {
            auto painter = make_potential_painter(PotentialClass::Outerplanar, true);
            auto lister = random_round_lister(rng, game);
            play(g, *lister, *painter);
            std::int64_t bad = 0;
            const auto& rounds = potential_debug(*painter);
            for (const PotentialRoundDebug& d : rounds)
                if (Q15::from_int(d.marked) > d.phi_before - d.phi_after) ++bad;
            total_rounds += static_cast<std::int64_t>(rounds.size());
            rep.instances.push_back(record(rep, "round-invariant", id, g,
                                           "|M| <= potential drop, every round", 0, bad,
                                           bad == 0));
        } catch (const TheoryViolation& e) {
            rep.instances.push_back(record(rep, "round-invariant", id, g,
                                           "|M| <= potential drop, every round", 0, -1, false,
                                           e.what()));
            total_rounds += 1;
        }
    }
    Graph empty(0, {});
    rep.instances.push_back(record(rep, "round-invariant", "rounds covered", empty,
                                   "total rounds >= target",
                                   static_cast<double>(opt.outer_rounds), total_rounds,
                                   total_rounds >= opt.outer_rounds));
    return rep;
}

SuiteReport run_good_coloring(const SuiteOptions& opt) {
    SuiteReport rep{"good-coloring", opt.seed, {}};
    Rng rng(opt.seed ^ 0x676f6f64636f6cULL);

    struct Class {
        const char* group;
        int k;
        bool planar;
    };
    for (Class cls : {Class{"planar-k4", 4, true}, Class{"outerplanar-k3", 3, false}}) {
        for (int i = 0; i < opt.coloring_sets; ++i) {
            int n = 5 + static_cast<int>(rng.next_below(36));
            Graph base = cls.planar ? gen_maximal_planar(n, rng) : gen_maximal_outerplanar(n, rng);
            Graph g = drop_edges(base, 1.0 - 0.4 * rng.next_double(), rng);
            VertexSet m = random_connected_set(g, rng);
            std::string id = "set " + std::to_string(i);
            bool ok = false;
            std::string detail;
            try {
                Coloring col = good_coloring(g, m, cls.k);
                ok = is_good_coloring(g, m, col);
                if (!ok) detail = "produced coloring fails the validator";
            } catch (const Error& e) {
                detail = e.what();
            }
            rep.instances.push_back(record(rep, cls.group, id, g,
                                           "good coloring exists and validates", 0, ok ? 0 : 1,
                                           ok, detail));
        }
    }
    return rep;
}

SuiteReport run_partitions(const SuiteOptions& opt) {
    SuiteReport rep{"partitions", opt.seed, {}};
    Rng rng(opt.seed ^ 0x706172746974696fULL);

    for (int i = 0; i < opt.partition_graphs; ++i) {
        int n = 5 + static_cast<int>(rng.next_below(26));
        Graph g = gen_random_graph(n, 0.05 + 0.45 * rng.next_double(), rng);
        int k = degeneracy(g);
        int t = 1 + static_cast<int>(rng.next_below(3));
        std::vector<int> budgets(t, 0);
        int units = std::max(0, k - t + 1) + static_cast<int>(rng.next_below(3));
        for (int u = 0; u < units; ++u) ++budgets[rng.next_below(t)];

        std::string id = "graph " + std::to_string(i) + " budgets=" + list_to_string(budgets);
        std::int64_t bad = 0;
        std::string detail;
        try {
            std::vector<VertexSet> parts = partition_degenerate(g, budgets);
            VertexSet seen(n);
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (seen.intersects(parts[j])) ++bad;
                seen |= parts[j];
                if (!parts[j].empty() &&
                    degeneracy(induced_subgraph(g, parts[j]).graph) > budgets[j])
                    ++bad;
            }
            if (seen != g.vertices()) ++bad;
        } catch (const Error& e) {
            bad = -1;
            detail = e.what();
        }
        rep.instances.push_back(record(rep, "degenerate", id, g,
                                       "parts within degeneracy budgets", 0, bad, bad == 0,
                                       detail));
    }

    for (int i = 0; i < opt.acyclic_graphs; ++i) {
        int n = 4 + static_cast<int>(rng.next_below(7));
        Graph g = gen_random_graph(n, 0.2 + 0.4 * rng.next_double(), rng);
        std::optional<Coloring> col;
        for (int k = 1; k <= n && !col; ++k) col = acyclic_coloring(g, k);

        std::string id = "graph " + std::to_string(i) + " k=" + std::to_string(col->k);
        std::int64_t bad = 0;
        std::string detail;
        try {
            std::vector<WeightedPart> parts = acyclic_pair_partition(g, *col);
            VertexSet seen(n);
            for (const WeightedPart& part : parts) {
                if (seen.intersects(part.vertices)) ++bad;
                seen |= part.vertices;
                if (part.cost == forest_cost()) {
                    if (!is_forest(g, part.vertices)) ++bad;
                } else if (part.cost == independent_cost()) {
                    if (!is_independent(g, part.vertices)) ++bad;
                } else {
                    ++bad;
                }
            }
            if (seen != g.vertices()) ++bad;
        } catch (const Error& e) {
            bad = -1;
            detail = e.what();
        }
        rep.instances.push_back(record(rep, "acyclic-pairs", id, g,
                                       "paired classes induce forests", 0, bad, bad == 0,
                                       detail));
    }
    return rep;
}

std::vector<std::string> suite_names() {
    return {"closed-forms",   "monotonicity",        "composite-multipartite",
            "composite-forests", "potential-4col",   "potential-outerplanar",
            "good-coloring",  "partitions"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "closed-forms") return run_closed_forms(opt);
    if (name == "monotonicity") return run_monotonicity(opt);
    if (name == "composite-multipartite") return run_composite_multipartite(opt);
    if (name == "composite-forests") return run_composite_forests(opt);
    if (name == "potential-4col") return run_potential_fourcol(opt);
    if (name == "potential-outerplanar") return run_potential_outerplanar(opt);
    if (name == "good-coloring") return run_good_coloring(opt);
    if (name == "partitions") return run_partitions(opt);
    throw BadInput("unknown suite: " + name);
}

std::string record_to_json(const InstanceRecord& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["group"] = r.group;
    j["id"] = r.id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["check"] = r.check;
    j["bound"] = r.bound;
    j["observed"] = r.observed;
    j["pass"] = r.pass;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

}  // namespace slowcol
