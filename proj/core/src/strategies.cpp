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

#include "slowcol/strategies.hpp"

#include <algorithm>

#include "slowcol/rng.hpp"

namespace slowcol {

namespace {

// Depth-first maximum independent set over the candidate list. Trying
// "include" before "exclude" walks candidate sets in ascending lexicographic
// order, so the first maximum found is the lexicographically least one.
struct MisSearch {
    const Graph& g;
    std::vector<int> order;  // ascending ids
    VertexSet best;
    int best_size = -1;

    MisSearch(const Graph& graph, const VertexSet& m) : g(graph), best(graph.n()) {
        order = m.to_vector();
    }

    void run(std::size_t idx, VertexSet& current, int size, const VertexSet& blocked) {
        int remaining = 0;
        for (std::size_t i = idx; i < order.size(); ++i)
            if (!blocked.contains(order[i])) ++remaining;
        if (size + remaining <= best_size) return;
        if (idx == order.size()) {
            if (size > best_size) {
                best_size = size;
                best = current;
            }
            return;
        }
        int v = order[idx];
        if (!blocked.contains(v)) {
            current.add(v);
            run(idx + 1, current, size + 1, blocked | g.neighbors(v));
            current.remove(v);
        }
        run(idx + 1, current, size, blocked);
    }
};

class GreedyPainter final : public Painter {
public:
    explicit GreedyPainter(int cap) : cap_(cap) {}
    std::string name() const override { return "greedy"; }
    void init(const Graph& g) override { graph_ = &g; }
    VertexSet respond(const VertexSet&, const VertexSet& marked,
                      std::span<const Round>) override {
        return max_independent_subset(*graph_, marked, cap_);
    }

private:
    const Graph* graph_ = nullptr;
    int cap_;
};

class FullLister final : public Lister {
public:
    std::string name() const override { return "full"; }
    void init(const Graph&) override {}
    VertexSet mark(const VertexSet& uncolored, std::span<const Round>) override {
        return uncolored;
    }
};

class SingletonsLister final : public Lister {
public:
    std::string name() const override { return "singletons"; }
    void init(const Graph&) override {}
    VertexSet mark(const VertexSet& uncolored, std::span<const Round>) override {
        VertexSet m(uncolored.ground());
        m.add(uncolored.first());
        return m;
    }
};

class RandomLister final : public Lister {
public:
    RandomLister(std::uint64_t seed, double p) : seed_(seed), p_(p), rng_(seed) {}
    std::string name() const override { return "random"; }
    std::optional<std::uint64_t> seed() const override { return seed_; }
    void init(const Graph&) override { rng_ = Rng(seed_); }
    VertexSet mark(const VertexSet& uncolored, std::span<const Round>) override {
        VertexSet m(uncolored.ground());
        for (int v : uncolored)
            if (rng_.next_bool(p_)) m.add(v);
        if (m.empty()) {
            std::vector<int> pool = uncolored.to_vector();
            m.add(pool[rng_.next_below(pool.size())]);
        }
        return m;
    }

private:
    std::uint64_t seed_;
    double p_;
    Rng rng_;
};

class ConnectedRandomLister final : public Lister {
public:
    explicit ConnectedRandomLister(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::string name() const override { return "connected-random"; }
    std::optional<std::uint64_t> seed() const override { return seed_; }
    void init(const Graph& g) override {
        graph_ = &g;
        rng_ = Rng(seed_);
    }
    VertexSet mark(const VertexSet& uncolored, std::span<const Round>) override {
        std::vector<VertexSet> comps = connected_components(*graph_, uncolored);
        const VertexSet& comp = comps[rng_.next_below(comps.size())];
        int target = 1 + static_cast<int>(rng_.next_below(static_cast<std::uint64_t>(comp.size())));
        VertexSet m(uncolored.ground());
        std::vector<int> frontier;
        std::vector<int> pool = comp.to_vector();
        int start = pool[rng_.next_below(pool.size())];
        m.add(start);
        auto extend_frontier = [&](int v) {
            for (int w : graph_->neighbors(v))
                if (comp.contains(w) && !m.contains(w)) frontier.push_back(w);
        };
        extend_frontier(start);
        while (m.size() < target && !frontier.empty()) {
            std::size_t at = rng_.next_below(frontier.size());
            int v = frontier[at];
            frontier[at] = frontier.back();
            frontier.pop_back();
            if (m.contains(v)) continue;
            m.add(v);
            extend_frontier(v);
        }
        return m;
    }

private:
    std::uint64_t seed_;
    Rng rng_;
    const Graph* graph_ = nullptr;
};

}  // namespace

VertexSet max_independent_subset(const Graph& g, const VertexSet& m, int cap) {
    if (m.size() > cap)
        throw CapExceeded("independent-set search over " + std::to_string(m.size()) +
                          " marked vertices exceeds cap " + std::to_string(cap));
    MisSearch search(g, m);
    VertexSet current(g.n());
    search.run(0, current, 0, VertexSet(g.n()));
    return search.best;
}

std::unique_ptr<Painter> make_greedy_painter(int cap) {
    return std::make_unique<GreedyPainter>(cap);
}

std::unique_ptr<Lister> make_full_lister() { return std::make_unique<FullLister>(); }

std::unique_ptr<Lister> make_singletons_lister() { return std::make_unique<SingletonsLister>(); }

std::unique_ptr<Lister> make_random_lister(std::uint64_t seed, double p) {
    return std::make_unique<RandomLister>(seed, p);
}

std::unique_ptr<Lister> make_connected_random_lister(std::uint64_t seed) {
    return std::make_unique<ConnectedRandomLister>(seed);
}

}  // namespace slowcol
