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

#ifndef SLOWCOL_STRATEGIES_HPP
#define SLOWCOL_STRATEGIES_HPP

#include <memory>

#include "slowcol/game.hpp"

namespace slowcol {

/// Painter that colors a maximum independent subset of the mark, found by
/// exact search (include-first branch order, so ties resolve to the
/// lexicographically least set). Marks larger than `cap` vertices throw
/// CapExceeded; the default cap keeps the search well inside desk scale.
std::unique_ptr<Painter> make_greedy_painter(int cap = 30);

/// A maximum independent subset of G[m], lexicographically least among the
/// maximums. Same cap semantics as the greedy painter.
VertexSet max_independent_subset(const Graph& g, const VertexSet& m, int cap = 30);

/// Marks every uncolored vertex, every round.
std::unique_ptr<Lister> make_full_lister();

/// Marks the single smallest-id uncolored vertex.
std::unique_ptr<Lister> make_singletons_lister();

/// Marks each uncolored vertex independently with probability p; falls back
/// to one uniform vertex when the coin flips all come up empty.
std::unique_ptr<Lister> make_random_lister(std::uint64_t seed, double p = 0.5);

/// Picks a uniformly random component of the uncolored graph, then grows a
/// random connected subset of it (uniform target size, random frontier
/// growth).
std::unique_ptr<Lister> make_connected_random_lister(std::uint64_t seed);

}  // namespace slowcol

#endif  // SLOWCOL_STRATEGIES_HPP
