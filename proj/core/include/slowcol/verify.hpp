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

#ifndef SLOWCOL_VERIFY_HPP
#define SLOWCOL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slowcol {

/// One checked instance inside a verification suite.
///
/// `check` names what was compared, `bound` is the numeric target and
/// `observed` the measured value. For bound checks pass means
/// observed <= floor(bound), evaluated exactly where the bound is rational
/// and with a fixed 1e-9 slack where it contains square roots; for equality
/// and invariant checks pass means observed == bound. `detail` is empty
/// unless there is something to explain.
struct InstanceRecord {
    std::string suite;
    std::string group;
    std::string id;
    int n = 0;
    int m = 0;
    std::string check;
    double bound = 0.0;
    std::int64_t observed = 0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<InstanceRecord> instances;

    int failures() const;
    bool passed() const { return failures() == 0; }
};

/// Scale knobs for the suites. The defaults are the sizes the library is
/// promised to hold at; shrinking them gives a quick smoke run.
struct SuiteOptions {
    std::uint64_t seed = 1;
    std::optional<int> cap;  // exact-solver cap override

    int monotone_pairs = 200;     // induced-subgraph pairs, n <= 9
    int additive_pairs = 100;     // disjoint-union pairs, summands n <= 6
    int multipartite_total = 11;  // all part lists with this total or less
    int forest_graphs = 100;      // two-forest-partitioned graphs, n <= 10

    int planar_lo = 4, planar_hi = 11, planar_reps = 3;
    int fourcol_rounds = 1000, fourcol_max_n = 60;

    int outer_lo = 3, outer_hi = 12, outer_reps = 3;
    int outer_rounds = 10000, outer_max_n = 300;

    int coloring_sets = 500;     // per graph class
    int partition_graphs = 200;  // degeneracy-split instances
    int acyclic_graphs = 100;    // acyclic-pairing instances
};

// Closed-form scores: cliques, paths, stars, the 4-cycle/path product and
// disjoint clique unions, all checked for exact equality against the solver.
SuiteReport run_closed_forms(const SuiteOptions& opt);

// Score monotonicity under induced subgraphs and additivity over disjoint
// unions, both via the exact solver.
SuiteReport run_monotonicity(const SuiteOptions& opt);

// Composite painter on every complete multipartite graph up to the total:
// score against the optimal lister stays under n + 2*sum sqrt(r_i r_j), and
// the triangular-number lower bound stays under the exact score.
SuiteReport run_composite_multipartite(const SuiteOptions& opt);

// Composite painter on random graphs carrying a verified partition into two
// forests: score stays under the square-root-sum bound, itself at most 3n.
SuiteReport run_composite_forests(const SuiteOptions& opt);

// Potential painter for 4-colorable graphs: score bound (8n+3m)/5 against
// the optimal lister on maximal planar instances, plus the per-round
// potential-drop invariant on random planar instances.
SuiteReport run_potential_fourcol(const SuiteOptions& opt);

// Potential painter for outerplanar graphs: score bound Phi(G) < (7/3)n on
// maximal outerplanar instances, plus the per-round invariant.
SuiteReport run_potential_outerplanar(const SuiteOptions& opt);

// good_coloring output on random connected marked sets is proper, and each
// tree-component together with its marked neighbors carries at most two
// colors.
SuiteReport run_good_coloring(const SuiteOptions& opt);

// partition_degenerate output parts are within their degeneracy budgets;
// acyclic_pair_partition parts induce forests or independent sets as priced.
SuiteReport run_partitions(const SuiteOptions& opt);

std::vector<std::string> suite_names();

/// Dispatch by suite name; unknown names raise BadInput.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

/// One-line JSON for a record (used for JSONL suite reports).
std::string record_to_json(const InstanceRecord& r);

}  // namespace slowcol

#endif  // SLOWCOL_VERIFY_HPP
