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

#ifndef SLOWCOL_DECOMPOSE_HPP
#define SLOWCOL_DECOMPOSE_HPP

#include <functional>
#include <iosfwd>
#include <memory>

#include "slowcol/coloring.hpp"
#include "slowcol/game.hpp"
#include "slowcol/rational.hpp"

namespace slowcol {

/// One piece of a vertex partition together with its guarantee coefficient:
/// the caller promises that a game confined to any induced subgraph H of
/// G[vertices] can be held to score at most cost * |V(H)|.
struct WeightedPart {
    VertexSet vertices;
    Rat cost;
};

/// Preset coefficients for the common part classes.
Rat forest_cost();         // 3/2
Rat independent_cost();    // 1
Rat complete_cost(int r);  // (r+1)/2 for a clique on r vertices

/// Validated partition of V(G) with derived routing weights
/// w_i = sqrt(c_i |V_i|) / sum_j sqrt(c_j |V_j|). Empty parts are dropped,
/// costs must be positive, parts must be disjoint and cover V(G).
class WeightedPartition {
public:
    WeightedPartition(const Graph& g, std::vector<WeightedPart> parts);

    const Graph& graph() const { return g_; }
    int count() const { return static_cast<int>(parts_.size()); }
    const WeightedPart& part(int i) const { return parts_[i]; }

    double weight(int i) const { return sqrt_terms_[i] / weight_sum_; }
    double sqrt_term(int i) const { return sqrt_terms_[i]; }  // sqrt(c_i |V_i|)
    double weight_sum() const { return weight_sum_; }         // sum of sqrt terms

    /// Score guarantee of the routing strategy: (sum_i sqrt(c_i |V_i|))^2.
    double sqrt_sum_bound() const { return weight_sum_ * weight_sum_; }

    /// Weaker guarantee (sum_i c_i) * n, exact; sqrt_sum_bound never exceeds
    /// it when the parts cover V(G).
    Rat cost_sum_bound() const;

private:
    Graph g_;
    std::vector<WeightedPart> parts_;
    std::vector<double> sqrt_terms_;
    double weight_sum_;
};

using SubPainterFactory = std::function<std::unique_ptr<Painter>(const Graph&)>;

/// Painter that runs an independent sub-game on each part. Each round it
/// routes the mark to the part maximizing |M n V_i| / (w_i |M|) (least index
/// on ties; the maximum is always >= 1 because the weights sum to 1), forwards
/// M n V_i to that part's sub-painter, and plays its response; marked vertices
/// outside the chosen part are ignored for the round.
///
/// With the default factory each part gets the exact-optimal painter when it
/// fits under the solver cap and the greedy painter otherwise; used_fallback()
/// reports whether the fallback was ever taken (the score guarantee of
/// sqrt_sum_bound needs exact sub-painters).
class CompositePainter final : public Painter {
public:
    explicit CompositePainter(WeightedPartition partition, SubPainterFactory factory = {});

    std::string name() const override { return "composite"; }
    void init(const Graph& g) override;
    VertexSet respond(const VertexSet& uncolored, const VertexSet& marked,
                      std::span<const Round> history) override;

    const WeightedPartition& partition() const { return partition_; }

    /// The rounds forwarded to part i so far; they form a legal game on
    /// G[V_i] in the part's local vertex ids.
    const std::vector<Round>& local_rounds(int i) const { return states_[i].rounds; }
    std::int64_t local_score(int i) const { return states_[i].score; }
    bool used_fallback() const { return used_fallback_; }

private:
    struct PartState {
        InducedSubgraph sub;
        std::unique_ptr<Painter> painter;
        VertexSet uncolored;
        std::vector<Round> rounds;
        std::int64_t score = 0;
    };

    WeightedPartition partition_;
    SubPainterFactory factory_;
    std::vector<PartState> states_;
    bool used_fallback_ = false;
};

/// Scans a degeneracy order and places each vertex into the least-index part
/// where it has at most budgets[i] earlier neighbors. Possible whenever
/// sum_i (budgets[i]+1) >= degeneracy(G)+1 (pigeonhole); throws BadInput
/// otherwise. Part i induces a budgets[i]-degenerate graph.
std::vector<VertexSet> partition_degenerate(const Graph& g, const std::vector<int>& budgets);

/// Specialization via the degeneracy k of G: for odd k, (k+1)/2 parts each
/// inducing a forest (cost 3/2); for even k, k/2 forest parts plus one
/// independent part (cost 1). Part properties are re-verified before return.
std::vector<WeightedPart> forest_partition(const Graph& g);

/// Pairs the color classes of an acyclic coloring, largest first, into forest
/// parts (cost 3/2); an odd class count leaves the smallest class as an
/// independent part (cost 1). Throws BadInput if the coloring is not a proper
/// acyclic coloring of all of V(G).
std::vector<WeightedPart> acyclic_pair_partition(const Graph& g, const Coloring& coloring);

// ---- bound calculators (pure) ----

/// (sum_i sqrt(costs[i] * sizes[i]))^2
double bound_sqrt_sum(const std::vector<Rat>& costs, const std::vector<std::int64_t>& sizes);

/// (sum_i costs[i]) * n, exact
Rat bound_cost_sum(const std::vector<Rat>& costs, std::int64_t n);

/// Interpolation between the two bounds above for a two-part partition:
/// (sqrt(cost_a * gamma) + sqrt(cost_b * (1-gamma)))^2 * (size_a + size_b).
/// Requires cost_a/(cost_a+cost_b) <= gamma <= size_a/(size_a+size_b);
/// at the right end it equals bound_sqrt_sum, at the left end bound_cost_sum.
double bound_two_class_mix(const Rat& cost_a, const Rat& cost_b, std::int64_t size_a,
                           std::int64_t size_b, double gamma);

/// Largest t with t(t+1)/2 <= r, by integer search.
std::int64_t max_triangular_below(std::int64_t r);

/// Complete multipartite with part sizes r: upper n + 2 sum_{i<j} sqrt(r_i r_j)
/// (attained by the composite painter over the independent sides) and lower
/// n + sum_{i<j} t_i t_j with t_i = max_triangular_below(r_i).
double bound_multipartite_upper(const std::vector<std::int64_t>& parts);
std::int64_t bound_multipartite_lower(const std::vector<std::int64_t>& parts);

/// Sharper multipartite upper bound n + sum_{i<j} sqrt(2r_i-1) sqrt(2r_j-1);
/// calculator only, no strategy here attains it.
double bound_multipartite_upper_refined(const std::vector<std::int64_t>& parts);

/// For k-degenerate graphs: (3k+4)/4 * n for even k, (3k+3)/4 * n for odd k.
Rat bound_degenerate(int k, std::int64_t n);

/// From an acyclic k-coloring by pairing classes: (3k/4) * n for even k,
/// ((3k+1)/4) * n for odd k.
Rat bound_acyclic(int k, std::int64_t n);

/// Sharper odd-k acyclic bound ((k-1) sqrt(3)/2 + 1)^2 / k * n; equals
/// bound_two_class_mix over the paired classes at gamma = (k-1)/k.
double bound_acyclic_odd(int k, std::int64_t n);

/// Partition into classes of sizes proportional p : q with per-class costs:
/// (sqrt(p c_p) + sqrt(q c_q))^2 / (p+q) * n.
double bound_pq(std::int64_t p, std::int64_t q, const Rat& cost_p, const Rat& cost_q,
                std::int64_t n);

/// Two spanning forests: 3n.
Rat bound_two_forests(std::int64_t n);

/// Summary of the bounds derivable from a graph plus a weighted partition.
struct BoundReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int degeneracy = 0;
    double sqrt_sum = 0;  // from the partition
    Rat cost_sum;         // from the partition
    Rat degenerate;       // from the graph's degeneracy alone
};

BoundReport bound_report(const Graph& g, const WeightedPartition& partition);

/// Partition file: one part per line of whitespace-separated vertex ids with
/// an optional trailing c=<rational> cost (default 1). Blank lines skipped.
std::vector<WeightedPart> read_partition_text(std::istream& in, int ground);

}  // namespace slowcol

#endif  // SLOWCOL_DECOMPOSE_HPP
