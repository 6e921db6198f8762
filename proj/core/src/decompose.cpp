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

#include "slowcol/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

#include "slowcol/errors.hpp"
#include "slowcol/solver.hpp"
#include "slowcol/strategies.hpp"

namespace slowcol {

Rat forest_cost() { return Rat(3, 2); }
Rat independent_cost() { return Rat(1); }

Rat complete_cost(int r) {
    if (r < 1) throw BadInput("complete_cost needs r >= 1");
    return Rat(static_cast<std::int64_t>(r) + 1, 2);
}

WeightedPartition::WeightedPartition(const Graph& g, std::vector<WeightedPart> parts)
    : g_(g), weight_sum_(0) {
    VertexSet seen(g_.n());
    for (auto& p : parts) {
        if (p.vertices.ground() != g_.n())
            throw BadInput("partition part over a different ground set");
        if (p.vertices.empty()) continue;
        if (!(p.cost > Rat(0))) throw BadInput("partition cost must be positive");
        if (seen.intersects(p.vertices)) throw BadInput("partition parts overlap");
        seen |= p.vertices;
        parts_.push_back(std::move(p));
    }
    if (seen != g_.vertices()) throw BadInput("partition does not cover the vertex set");
    sqrt_terms_.reserve(parts_.size());
    for (const auto& p : parts_) {
        double term = std::sqrt(p.cost.to_double() * p.vertices.size());
        sqrt_terms_.push_back(term);
        weight_sum_ += term;
    }
}

Rat WeightedPartition::cost_sum_bound() const {
    Rat total(0);
    for (const auto& p : parts_) total = total + p.cost;
    return total * Rat(g_.n());
}

CompositePainter::CompositePainter(WeightedPartition partition, SubPainterFactory factory)
    : partition_(std::move(partition)), factory_(std::move(factory)) {}

void CompositePainter::init(const Graph& g) {
    const Graph& pg = partition_.graph();
    if (g.n() != pg.n() || g.edges() != pg.edges())
        throw BadInput("composite painter initialized with a different graph than its partition");
    states_.clear();
    used_fallback_ = false;
    for (int i = 0; i < partition_.count(); ++i) {
        PartState st;
        st.sub = induced_subgraph(g, partition_.part(i).vertices);
        if (factory_) {
            st.painter = factory_(st.sub.graph);
        } else if (st.sub.graph.n() <= ExactSolver::default_cap()) {
            st.painter = make_optimal_painter();
        } else {
            used_fallback_ = true;
            st.painter = make_greedy_painter();
        }
        st.painter->init(st.sub.graph);
        st.uncolored = st.sub.graph.vertices();
        states_.push_back(std::move(st));
    }
}

VertexSet CompositePainter::respond(const VertexSet& uncolored, const VertexSet& marked,
                                    std::span<const Round>) {
    (void)uncolored;
    const int total = marked.size();
    if (total == 0) throw BadInput("empty mark");

    int best_i = -1;
    int best_size = 0;
    double best_key = -1.0;
    VertexSet best_mi;
    for (int i = 0; i < partition_.count(); ++i) {
        VertexSet mi = marked & partition_.part(i).vertices;
        int sz = mi.size();
        if (sz == 0) continue;
        double key = sz / partition_.sqrt_term(i);
        if (key > best_key) {
            best_key = key;
            best_i = i;
            best_size = sz;
            best_mi = std::move(mi);
        }
    }
    if (best_i < 0) throw TheoryViolation("mark hit no part of a covering partition");

    // |M n V_i| / (w_i |M|) >= 1 for the argmax, since the weights sum to 1.
    // Cross-multiplied to avoid dividing, with a float guard.
    double lhs = static_cast<double>(best_size) * partition_.weight_sum();
    double rhs = static_cast<double>(total) * partition_.sqrt_term(best_i);
    if (lhs < rhs * (1.0 - 1e-9))
        throw TheoryViolation("chosen part fell below its routing weight");

    PartState& st = states_[best_i];
    VertexSet local_mark = st.sub.map_down(best_mi);
    if (!local_mark.subset_of(st.uncolored))
        throw TheoryViolation("part-local uncolored set out of sync with the game");

    VertexSet resp = st.painter->respond(st.uncolored, local_mark, st.rounds);
    if (resp.empty() || !resp.subset_of(local_mark) || !is_independent(st.sub.graph, resp))
        throw IllegalResponse("sub-painter for part " + std::to_string(best_i) +
                              " returned an invalid response");

    st.score += local_mark.size();
    st.rounds.push_back({local_mark, resp, st.score});
    st.uncolored -= resp;
    return st.sub.map_up(resp);
}

std::vector<VertexSet> partition_degenerate(const Graph& g, const std::vector<int>& budgets) {
    if (budgets.empty()) throw BadInput("no parts requested");
    for (int b : budgets)
        if (b < 0) throw BadInput("negative degeneracy budget");

    Ordering ord = degeneracy_ordering(g);
    std::int64_t room = 0;
    for (int b : budgets) room += b + 1;
    if (room < static_cast<std::int64_t>(ord.back_degree) + 1)
        throw BadInput("budgets admit at most " + std::to_string(room - 1) +
                       "-degenerate graphs, got degeneracy " + std::to_string(ord.back_degree));

    std::vector<VertexSet> parts(budgets.size(), VertexSet(g.n()));
    for (int v : ord.order) {
        bool placed = false;
        for (std::size_t i = 0; i < parts.size() && !placed; ++i) {
            if ((g.neighbors(v) & parts[i]).size() <= budgets[i]) {
                parts[i].add(v);
                placed = true;
            }
        }
        // Pigeonhole: v has at most back_degree earlier neighbors, and full
        // parts would hold at least sum(budgets[i]+1) > back_degree of them.
        if (!placed) throw TheoryViolation("vertex rejected by every part despite room");
    }
    return parts;
}

std::vector<WeightedPart> forest_partition(const Graph& g) {
    int k = degeneracy(g);
    std::vector<int> budgets;
    if (k % 2 == 1) {
        budgets.assign((k + 1) / 2, 1);
    } else {
        budgets.assign(k / 2, 1);
        budgets.push_back(0);
    }
    std::vector<VertexSet> raw = partition_degenerate(g, budgets);

    std::vector<WeightedPart> parts;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (budgets[i] == 1) {
            if (!is_forest(g, raw[i])) throw TheoryViolation("budget-1 part induces a cycle");
            parts.push_back({raw[i], forest_cost()});
        } else {
            if (!is_independent(g, raw[i])) throw TheoryViolation("budget-0 part has an edge");
            parts.push_back({raw[i], independent_cost()});
        }
    }
    return parts;
}

std::vector<WeightedPart> acyclic_pair_partition(const Graph& g, const Coloring& coloring) {
    if (coloring.domain != g.vertices())
        throw BadInput("coloring must cover the whole vertex set");
    if (!is_acyclic_coloring(g, coloring))
        throw BadInput("coloring is not a proper acyclic coloring");

    std::vector<int> order(coloring.k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<VertexSet> classes;
    classes.reserve(coloring.k);
    for (int c = 0; c < coloring.k; ++c) classes.push_back(coloring.class_of(c));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return classes[a].size() > classes[b].size();
    });

    std::vector<WeightedPart> parts;
    int i = 0;
    for (; i + 1 < coloring.k; i += 2) {
        VertexSet pair = classes[order[i]] | classes[order[i + 1]];
        if (!is_forest(g, pair)) throw TheoryViolation("paired color classes induce a cycle");
        parts.push_back({std::move(pair), forest_cost()});
    }
    if (i < coloring.k) {
        const VertexSet& last = classes[order[i]];
        if (!is_independent(g, last)) throw TheoryViolation("color class has an internal edge");
        parts.push_back({last, independent_cost()});
    }
    return parts;
}

double bound_sqrt_sum(const std::vector<Rat>& costs, const std::vector<std::int64_t>& sizes) {
    if (costs.size() != sizes.size()) throw BadInput("costs and sizes differ in length");
    double sum = 0;
    for (std::size_t i = 0; i < costs.size(); ++i) {
        if (!(costs[i] > Rat(0))) throw BadInput("cost must be positive");
        if (sizes[i] < 0) throw BadInput("negative part size");
        sum += std::sqrt(costs[i].to_double() * static_cast<double>(sizes[i]));
    }
    return sum * sum;
}

Rat bound_cost_sum(const std::vector<Rat>& costs, std::int64_t n) {
    if (n < 0) throw BadInput("negative vertex count");
    Rat total(0);
    for (const Rat& c : costs) {
        if (!(c > Rat(0))) throw BadInput("cost must be positive");
        total = total + c;
    }
    return total * Rat(n);
}

double bound_two_class_mix(const Rat& cost_a, const Rat& cost_b, std::int64_t size_a,
                           std::int64_t size_b, double gamma) {
    if (!(cost_a > Rat(0)) || !(cost_b > Rat(0))) throw BadInput("costs must be positive");
    if (size_a < 0 || size_b < 0 || size_a + size_b == 0) throw BadInput("bad part sizes");
    double lo = (cost_a / (cost_a + cost_b)).to_double();
    double hi = static_cast<double>(size_a) / static_cast<double>(size_a + size_b);
    if (gamma < lo - 1e-12 || gamma > hi + 1e-12)
        throw BadInput("gamma outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    double s = std::sqrt(cost_a.to_double() * gamma) + std::sqrt(cost_b.to_double() * (1 - gamma));
    return s * s * static_cast<double>(size_a + size_b);
}

std::int64_t max_triangular_below(std::int64_t r) {
    if (r < 0) throw BadInput("negative argument");
    std::int64_t t = 0;
    while ((t + 1) * (t + 2) / 2 <= r) ++t;
    return t;
}

double bound_multipartite_upper(const std::vector<std::int64_t>& parts) {
    std::int64_t n = 0;
    for (std::int64_t r : parts) {
        if (r < 1) throw BadInput("part sizes must be at least 1");
        n += r;
    }
    double cross = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            cross += std::sqrt(static_cast<double>(parts[i]) * static_cast<double>(parts[j]));
    return static_cast<double>(n) + 2 * cross;
}

std::int64_t bound_multipartite_lower(const std::vector<std::int64_t>& parts) {
    std::int64_t n = 0;
    for (std::int64_t r : parts) {
        if (r < 1) throw BadInput("part sizes must be at least 1");
        n += r;
    }
    std::int64_t cross = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            cross += max_triangular_below(parts[i]) * max_triangular_below(parts[j]);
    return n + cross;
}

double bound_multipartite_upper_refined(const std::vector<std::int64_t>& parts) {
    std::int64_t n = 0;
    for (std::int64_t r : parts) {
        if (r < 1) throw BadInput("part sizes must be at least 1");
        n += r;
    }
    double cross = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            cross += std::sqrt(static_cast<double>(2 * parts[i] - 1)) *
                     std::sqrt(static_cast<double>(2 * parts[j] - 1));
    return static_cast<double>(n) + cross;
}

Rat bound_degenerate(int k, std::int64_t n) {
    if (k < 0 || n < 0) throw BadInput("negative argument");
    if (k % 2 == 0) return Rat(3LL * k + 4, 4) * Rat(n);
    return Rat(3LL * k + 3, 4) * Rat(n);
}

Rat bound_acyclic(int k, std::int64_t n) {
    if (k < 1 || n < 0) throw BadInput("need a positive color count");
    if (k % 2 == 0) return Rat(3LL * k, 4) * Rat(n);
    return Rat(3LL * k + 1, 4) * Rat(n);
}

double bound_acyclic_odd(int k, std::int64_t n) {
    if (k < 1 || k % 2 == 0) throw BadInput("need odd k");
    if (n < 0) throw BadInput("negative vertex count");
    double s = (k - 1) * std::sqrt(3.0) / 2.0 + 1.0;
    return s * s / static_cast<double>(k) * static_cast<double>(n);
}

double bound_pq(std::int64_t p, std::int64_t q, const Rat& cost_p, const Rat& cost_q,
                std::int64_t n) {
    if (p < 1 || q < 1 || n < 0) throw BadInput("need positive p, q");
    if (!(cost_p > Rat(0)) || !(cost_q > Rat(0))) throw BadInput("costs must be positive");
    double s = std::sqrt(static_cast<double>(p) * cost_p.to_double()) +
               std::sqrt(static_cast<double>(q) * cost_q.to_double());
    return s * s / static_cast<double>(p + q) * static_cast<double>(n);
}

Rat bound_two_forests(std::int64_t n) {
    if (n < 0) throw BadInput("negative vertex count");
    return Rat(3) * Rat(n);
}

BoundReport bound_report(const Graph& g, const WeightedPartition& partition) {
    BoundReport r;
    r.n = g.n();
    r.m = g.m();
    r.degeneracy = degeneracy(g);
    r.sqrt_sum = partition.sqrt_sum_bound();
    r.cost_sum = partition.cost_sum_bound();
    r.degenerate = bound_degenerate(r.degeneracy, r.n);
    return r;
}

std::vector<WeightedPart> read_partition_text(std::istream& in, int ground) {
    std::vector<WeightedPart> parts;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        VertexSet vs(ground);
        Rat cost(1);
        std::string tok;
        bool any = false;
        while (ls >> tok) {
            if (tok.rfind("c=", 0) == 0) {
                cost = parse_rat(tok.substr(2));
                continue;
            }
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw BadInput("trailing junk");
                vs.add(v);
                any = true;
            } catch (const BadInput&) {
                throw;
            } catch (const std::exception&) {
                throw BadInput("bad partition token: " + tok);
            }
        }
        if (any) parts.push_back({std::move(vs), cost});
    }
    return parts;
}

}  // namespace slowcol
