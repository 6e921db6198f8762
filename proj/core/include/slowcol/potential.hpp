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

#ifndef SLOWCOL_POTENTIAL_HPP
#define SLOWCOL_POTENTIAL_HPP

#include <memory>

#include "slowcol/coloring.hpp"
#include "slowcol/game.hpp"
#include "slowcol/q15.hpp"

namespace slowcol {

/// The two graph classes the potential-method painters handle. The class
/// fixes the potential assignment and the color count k of the strategy.
enum class PotentialClass {
    FourColorable,  // k = 4; edges 3/5, vertex 1 + min(d,3)/5
    Outerplanar,    // k = 3; edges 1/3, vertex 5/3 | 4/3 | 1 by triangle/degree
};

/// Potential assignment for one class: a constant per edge plus a per-vertex
/// rule depending only on the vertex's local structure. Monotone under
/// induced subgraphs: deleting vertices never raises a survivor's potential.
struct PotentialSpec {
    PotentialClass cls;
    Q15 edge;  // potential of every edge
    int k;     // colors used by good colorings and augmentation

    static PotentialSpec four_colorable();
    static PotentialSpec outerplanar();

    Q15 vertex(const Graph& g, int v) const;
};

/// Sum of all vertex and edge potentials.
Q15 total_potential(const Graph& g, const PotentialSpec& spec);

/// Potential slack of coloring X against the mark M:
/// u(X) = total_potential(G) - total_potential(G - X) - |M|.
/// The painter looks for X with u(X) >= 0. Throws BadInput unless X is an
/// independent subset of M.
Q15 utility(const Graph& g, const PotentialSpec& spec, const VertexSet& m, const VertexSet& x);

/// Per-vertex share of u(X):
///   v in X:       vertex(v) + edge * d_G(v) - 1
///   v in M - X:   vertex_G(v) - vertex_{G-X}(v) - 1
///   otherwise:    vertex_G(v) - vertex_{G-X}(v)
/// Sums to utility(...) over all vertices, and each share is >= -1.
Q15 vertex_utility(const Graph& g, const PotentialSpec& spec, const VertexSet& m,
                   const VertexSet& x, int v);

/// Proper k-coloring of G[m] in which, for every component t of the no-cycle
/// part of m (see cycle_split), t together with its neighbors inside m uses
/// at most two colors. m must be nonempty and connected in G[m]; throws
/// BadInput when G[m] is not k-colorable.
Coloring good_coloring(const Graph& g, const VertexSet& m, int k);

/// Checks the good_coloring contract on an arbitrary coloring of domain m.
bool is_good_coloring(const Graph& g, const VertexSet& m, const Coloring& coloring);

/// Color classes enlarged by extra colors on low-degree vertices. Every class
/// stays independent, classes jointly cover m, and class i contains the
/// original color class i.
struct AugmentedClasses {
    std::vector<VertexSet> classes;
    std::vector<std::pair<int, int>> added;  // (vertex, class) additions
};

/// Four-colorable augmentation: P = members of m with degree <= 2 in G[m];
/// each component of G[P] is a path or cycle; a maximum independent subset of
/// it joins every class containing neither the vertex nor any of its
/// G[m]-neighbors.
AugmentedClasses augment_four_colorable(const Graph& g, const VertexSet& m,
                                        const Coloring& coloring);

/// Outerplanar augmentation: P is restricted to the no-cycle part of m, so
/// components of G[P] are paths. Each path joins the one color absent from
/// its tree-component's block (the component plus its G[m]-neighbors, always
/// a 2-colored tree here), taking alternate path vertices starting from the
/// lower end unless that end has degree 1 in G. Requires |m| >= 2.
AugmentedClasses augment_outerplanar(const Graph& g, const VertexSet& m,
                                     const Coloring& coloring);

/// Diagnostics for one round of the potential painter.
struct PotentialRoundDebug {
    std::int64_t round = 0;
    std::int64_t marked = 0;
    Q15 phi_before;
    Q15 phi_after;
    std::vector<std::pair<int, Q15>> choices;  // per component: class index, utility
};

/// Painter guaranteeing score <= total_potential(G): each round it covers
/// every component of the marked subgraph with augmented classes and plays a
/// class of maximum (nonnegative) utility, components handled one after
/// another so the potential drops telescope. Construction is per class:
///   FourColorable: init verifies a proper 4-coloring exists (BadInput if not).
///   Outerplanar: the caller certifies G is an induced subgraph of a maximal
///   outerplanar graph; there is no feasibility check.
/// A negative best utility means the method's guarantee failed and throws
/// TheoryViolation.
std::unique_ptr<Painter> make_potential_painter(PotentialClass cls, bool record_debug = false);

/// Debug records of a painter made by make_potential_painter (empty unless
/// record_debug was set). The pointer must come from that factory.
const std::vector<PotentialRoundDebug>& potential_debug(const Painter& painter);

}  // namespace slowcol

#endif  // SLOWCOL_POTENTIAL_HPP
