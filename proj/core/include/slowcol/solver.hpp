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

#ifndef SLOWCOL_SOLVER_HPP
#define SLOWCOL_SOLVER_HPP

#include <cstdint>
#include <memory>

#include "slowcol/game.hpp"
#include "slowcol/strategies.hpp"

namespace slowcol {

/// Exact game values for every uncolored subset, by memoized minimax:
///
///   value(empty) = 0
///   value(U) = max over nonempty M in U of
///                |M| + min over maximal independent X of G[M] of value(U - X)
///
/// Restricting the Painter to maximal independent responses does not change
/// the value (coloring more never helps the Lister), which the test suite
/// cross-checks against the unrestricted recurrence on every 6-vertex graph.
///
/// Time and memory grow like 3^n; the default cap is 13 vertices, overridable
/// per call or by the SLOWCOL_CAP environment variable. Beyond roughly 16 the
/// table build takes minutes.
class ExactSolver {
public:
    explicit ExactSolver(const Graph& g, std::optional<int> cap = std::nullopt);

    static int default_cap();

    const Graph& graph() const { return g_; }

    /// Score under optimal play when exactly `uncolored` remains.
    std::int64_t value(const VertexSet& uncolored) const;

    /// Score of the whole game under optimal play by both sides.
    std::int64_t sum_color_cost() const;

    /// A maximal independent subset of G[m] minimizing the value of the rest.
    /// Ties break to the lexicographically least set.
    VertexSet best_painter_response(const VertexSet& uncolored, const VertexSet& marked) const;

    /// A nonempty mark maximizing the recurrence. Ties break to the
    /// lexicographically least set.
    VertexSet best_lister_mark(const VertexSet& uncolored) const;

private:
    std::uint32_t to_mask(const VertexSet& s) const;
    VertexSet to_set(std::uint32_t mask) const;

    Graph g_;
    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::int32_t> value_;
    std::vector<std::vector<std::uint32_t>> maximal_responses_;
};

/// Score of G under optimal play; convenience wrapper building a solver.
std::int64_t sum_color_cost(const Graph& g, std::optional<int> cap = std::nullopt);

/// Painter that plays table-optimal responses. When constructed with a
/// solver it must be for the same graph the game is played on; otherwise the
/// table is built in init (throws CapExceeded if the graph is too large).
std::unique_ptr<Painter> make_optimal_painter(std::shared_ptr<const ExactSolver> solver = nullptr,
                                              std::optional<int> cap = std::nullopt);

/// Lister that plays table-optimal marks; same table semantics as above.
std::unique_ptr<Lister> make_optimal_lister(std::shared_ptr<const ExactSolver> solver = nullptr,
                                            std::optional<int> cap = std::nullopt);

}  // namespace slowcol

#endif  // SLOWCOL_SOLVER_HPP
