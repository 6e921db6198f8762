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

#include "slowcol/game.hpp"

#include <json.hpp>

namespace slowcol {

Trace play(const Graph& g, Lister& lister, Painter& painter,
           std::optional<std::int64_t> round_cap) {
    std::int64_t cap = round_cap.value_or(2LL * g.n());
    if (cap < g.n()) throw BadInput("round cap below vertex count");
    lister.init(g);
    painter.init(g);

    Trace trace;
    trace.n = g.n();
    trace.edges = g.edges();
    trace.painter = painter.name();
    trace.lister = lister.name();
    trace.seed = lister.seed().value_or(painter.seed().value_or(0));

    VertexSet uncolored = g.vertices();
    std::int64_t score = 0;
    while (!uncolored.empty()) {
        if (static_cast<std::int64_t>(trace.rounds.size()) >= cap)
            throw RoundCapExceeded("game exceeded round cap " + std::to_string(cap));
        VertexSet marked = lister.mark(uncolored, trace.rounds);
        if (marked.ground() != g.n())
            throw IllegalMark("lister marked over the wrong ground set");
        if (marked.empty()) throw IllegalMark("lister marked the empty set");
        if (!marked.subset_of(uncolored))
            throw IllegalMark("lister marked colored or unknown vertices");
        VertexSet colored = painter.respond(uncolored, marked, trace.rounds);
        if (colored.ground() != g.n())
            throw IllegalResponse("painter colored over the wrong ground set");
        if (colored.empty()) throw IllegalResponse("painter colored the empty set");
        if (!colored.subset_of(marked)) throw IllegalResponse("painter colored unmarked vertices");
        if (!is_independent(g, colored))
            throw IllegalResponse("painter colored a dependent set");
        score += marked.size();
        uncolored -= colored;
        trace.rounds.push_back({marked, colored, score});
    }
    trace.final_score = score;
    return trace;
}

bool trace_consistent(const Graph& g, const Trace& t) {
    if (t.n != g.n()) return false;
    VertexSet uncolored = g.vertices();
    std::int64_t score = 0;
    for (const Round& r : t.rounds) {
        if (r.marked.empty() || !r.marked.subset_of(uncolored)) return false;
        if (r.colored.empty() || !r.colored.subset_of(r.marked)) return false;
        if (!is_independent(g, r.colored)) return false;
        score += r.marked.size();
        if (score != r.score_after) return false;
        uncolored -= r.colored;
    }
    return uncolored.empty() && score == t.final_score;
}

std::string trace_to_json(const Trace& t) {
    nlohmann::json j;
    j["graph"]["n"] = t.n;
    auto& edges = j["graph"]["edges"] = nlohmann::json::array();
    for (auto [u, v] : t.edges) edges.push_back({u, v});
    auto& rounds = j["rounds"] = nlohmann::json::array();
    for (const Round& r : t.rounds) {
        nlohmann::json jr;
        jr["marked"] = r.marked.to_vector();
        jr["colored"] = r.colored.to_vector();
        jr["score_after"] = r.score_after;
        rounds.push_back(jr);
    }
    j["final_score"] = t.final_score;
    j["painter"] = t.painter;
    j["lister"] = t.lister;
    j["seed"] = t.seed;
    return j.dump();
}

}  // namespace slowcol
