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

#ifndef SLOWCOL_GAME_HPP
#define SLOWCOL_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slowcol/graph.hpp"

namespace slowcol {

/// One completed round: Lister marked `marked`, scoring |marked|; Painter
/// colored `colored`. score_after is the running total.
struct Round {
    VertexSet marked;
    VertexSet colored;
    std::int64_t score_after = 0;
};

/// Painter strategy. init is called once per game before the first round;
/// respond must return a nonempty independent subset of the marked set.
/// Strategies may keep state between rounds; the engine passes the full
/// round history for strategies that want more than the current position.
class Painter {
public:
    virtual ~Painter() = default;
    virtual std::string name() const = 0;
    virtual void init(const Graph& g) = 0;
    virtual VertexSet respond(const VertexSet& uncolored, const VertexSet& marked,
                              std::span<const Round> history) = 0;
    virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

/// Lister strategy. mark must return a nonempty subset of the uncolored set.
class Lister {
public:
    virtual ~Lister() = default;
    virtual std::string name() const = 0;
    virtual void init(const Graph& g) = 0;
    virtual VertexSet mark(const VertexSet& uncolored, std::span<const Round> history) = 0;
    virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

/// Full record of one game.
struct Trace {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Round> rounds;
    std::int64_t final_score = 0;
    std::string painter;
    std::string lister;
    std::uint64_t seed = 0;
};

/// Plays one game to completion and validates every move.
///
/// Each round the Lister marks a nonempty subset of the uncolored vertices
/// and scores its size; the Painter colors a nonempty independent subset of
/// the mark. The game ends when every vertex is colored. round_cap defaults
/// to 2n and must be at least n; a game that exceeds it throws
/// RoundCapExceeded (cannot happen with legal strategies, since each round
/// colors at least one vertex).
Trace play(const Graph& g, Lister& lister, Painter& painter,
           std::optional<std::int64_t> round_cap = std::nullopt);

/// Sanity checks on a finished trace: rounds partition V, every response was
/// independent and inside its mark, the score adds up.
bool trace_consistent(const Graph& g, const Trace& t);

/// Canonical JSON encoding (keys sorted, no whitespace dependence on input).
std::string trace_to_json(const Trace& t);

}  // namespace slowcol

#endif  // SLOWCOL_GAME_HPP
