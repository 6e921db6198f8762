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

#include "slowcol/solver.hpp"

#include <bit>
#include <cstdlib>
#include <limits>

#include "slowcol/errors.hpp"

namespace slowcol {

namespace {

// Memory for the value table and response lists explodes past this point.
constexpr int kHardCap = 24;

// Order on masks matching lex_less on their ascending member sequences:
// {0} < {0,1} < {1}. The lowest differing bit decides, except that a set
// that is a proper prefix of the other sorts first.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a ^ b;
    if (d == 0) return false;
    std::uint32_t low = d & ~(d - 1);
    std::uint32_t above = ~(low | (low - 1));
    if (a & low) return (b & above) != 0;  // b ran out: b is a prefix of a
    return (a & above) == 0;               // a ran out: a is a prefix of b
}

// One pass over the members of m: vertices in x must have no x-neighbor,
// vertices of m - x must have one (maximality within G[m]).
bool is_maximal_independent(std::uint32_t x, std::uint32_t m,
                            const std::vector<std::uint32_t>& adj) {
    for (std::uint32_t rest = m; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        bool hit = (adj[v] & x) != 0;
        if ((x >> v) & 1u) {
            if (hit) return false;
        } else if (!hit) {
            return false;
        }
    }
    return true;
}

}  // namespace

int ExactSolver::default_cap() {
    if (const char* env = std::getenv("SLOWCOL_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 13;
}

ExactSolver::ExactSolver(const Graph& g, std::optional<int> cap) : g_(g), n_(g.n()) {
    int limit = cap.value_or(default_cap());
    if (n_ > limit)
        throw CapExceeded("exact solve of a " + std::to_string(n_) +
                          "-vertex graph exceeds the cap of " + std::to_string(limit) +
                          " (raise it explicitly or via SLOWCOL_CAP)");
    if (n_ > kHardCap)
        throw CapExceeded("exact solve tables do not fit in memory beyond " +
                          std::to_string(kHardCap) + " vertices");

    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [a, b] : g_.edges()) {
        adj_[a] |= 1u << b;
        adj_[b] |= 1u << a;
    }

    const std::uint32_t full = (n_ == 0) ? 0 : ((1u << n_) - 1);
    maximal_responses_.resize(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t m = 1; m <= full; ++m) {
        auto& list = maximal_responses_[m];
        for (std::uint32_t x = m;; x = (x - 1) & m) {
            if (x && is_maximal_independent(x, m, adj_)) list.push_back(x);
            if (x == 0) break;
        }
    }

    // value(U - X) is indexed at a strictly smaller mask than U, so plain
    // ascending mask order is a valid evaluation order.
    value_.assign(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t u = 1; u <= full; ++u) {
        std::int32_t best = 0;
        for (std::uint32_t m = u;; m = (m - 1) & u) {
            if (m) {
                std::int32_t worst = std::numeric_limits<std::int32_t>::max();
                for (std::uint32_t x : maximal_responses_[m])
                    worst = std::min(worst, value_[u ^ x]);
                best = std::max(best, std::popcount(m) + worst);
            }
            if (m == 0) break;
        }
        value_[u] = best;
    }
}

std::uint32_t ExactSolver::to_mask(const VertexSet& s) const {
    if (s.ground() != n_) throw BadInput("vertex set ground does not match solver graph");
    std::uint32_t mask = 0;
    for (int v : s) mask |= 1u << v;
    return mask;
}

VertexSet ExactSolver::to_set(std::uint32_t mask) const {
    VertexSet s(n_);
    while (mask) {
        s.add(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

std::int64_t ExactSolver::value(const VertexSet& uncolored) const {
    return value_[to_mask(uncolored)];
}

std::int64_t ExactSolver::sum_color_cost() const {
    return value_[value_.size() - 1];
}

VertexSet ExactSolver::best_painter_response(const VertexSet& uncolored,
                                             const VertexSet& marked) const {
    std::uint32_t u = to_mask(uncolored);
    std::uint32_t m = to_mask(marked);
    if (m == 0) throw BadInput("marked set is empty");
    if (m & ~u) throw BadInput("marked set is not inside the uncolored set");

    std::uint32_t best_x = 0;
    std::int32_t best_val = std::numeric_limits<std::int32_t>::max();
    for (std::uint32_t x : maximal_responses_[m]) {
        std::int32_t val = value_[u ^ x];
        if (val < best_val || (val == best_val && mask_lex_less(x, best_x))) {
            best_val = val;
            best_x = x;
        }
    }
    return to_set(best_x);
}

VertexSet ExactSolver::best_lister_mark(const VertexSet& uncolored) const {
    std::uint32_t u = to_mask(uncolored);
    if (u == 0) throw BadInput("no uncolored vertices to mark");

    std::uint32_t best_m = 0;
    std::int32_t best_score = -1;
    for (std::uint32_t m = u;; m = (m - 1) & u) {
        if (m) {
            std::int32_t worst = std::numeric_limits<std::int32_t>::max();
            for (std::uint32_t x : maximal_responses_[m])
                worst = std::min(worst, value_[u ^ x]);
            std::int32_t score = std::popcount(m) + worst;
            if (score > best_score || (score == best_score && mask_lex_less(m, best_m))) {
                best_score = score;
                best_m = m;
            }
        }
        if (m == 0) break;
    }
    return to_set(best_m);
}

std::int64_t sum_color_cost(const Graph& g, std::optional<int> cap) {
    return ExactSolver(g, cap).sum_color_cost();
}

namespace {

bool solver_matches(const ExactSolver* solver, const Graph& g) {
    return solver && solver->graph().n() == g.n() && solver->graph().edges() == g.edges();
}

class OptimalPainter final : public Painter {
public:
    OptimalPainter(std::shared_ptr<const ExactSolver> solver, std::optional<int> cap)
        : solver_(std::move(solver)), cap_(cap) {}

    std::string name() const override { return "optimal"; }

    void init(const Graph& g) override {
        if (!solver_matches(solver_.get(), g))
            solver_ = std::make_shared<const ExactSolver>(g, cap_);
    }

    VertexSet respond(const VertexSet& uncolored, const VertexSet& marked,
                      std::span<const Round>) override {
        return solver_->best_painter_response(uncolored, marked);
    }

private:
    std::shared_ptr<const ExactSolver> solver_;
    std::optional<int> cap_;
};

class OptimalLister final : public Lister {
public:
    OptimalLister(std::shared_ptr<const ExactSolver> solver, std::optional<int> cap)
        : solver_(std::move(solver)), cap_(cap) {}

    std::string name() const override { return "optimal"; }

    void init(const Graph& g) override {
        if (!solver_matches(solver_.get(), g))
            solver_ = std::make_shared<const ExactSolver>(g, cap_);
    }

    VertexSet mark(const VertexSet& uncolored, std::span<const Round>) override {
        return solver_->best_lister_mark(uncolored);
    }

private:
    std::shared_ptr<const ExactSolver> solver_;
    std::optional<int> cap_;
};

}  // namespace

std::unique_ptr<Painter> make_optimal_painter(std::shared_ptr<const ExactSolver> solver,
                                              std::optional<int> cap) {
    return std::make_unique<OptimalPainter>(std::move(solver), cap);
}

std::unique_ptr<Lister> make_optimal_lister(std::shared_ptr<const ExactSolver> solver,
                                            std::optional<int> cap) {
    return std::make_unique<OptimalLister>(std::move(solver), cap);
}

}  // namespace slowcol
