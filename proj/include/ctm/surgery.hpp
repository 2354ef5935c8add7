#ifndef CTM_SURGERY_HPP
#define CTM_SURGERY_HPP

#include <array>
#include <vector>

#include "ctm/graph.hpp"

namespace ctm {

// An edge named by its color and white endpoint: the edge (w, sigma_c(w)),
// or the propagator pair (w, prop0[w]) for color 0 in open graphs.
struct EdgeRef {
    int color = 1;
    int white = 0;
};

// Connected sum along same-colored edges e in g1 and f in g2: disjoint union
// with e, f replaced by the crossed edges white(e)->black(f), white(f)->black(e).
// Vertices of g2 are offset by g1.half_order.  Degree is additive.
ColoredGraph connected_sum(const ColoredGraph& g1, EdgeRef e, const ColoredGraph& g2, EdgeRef f);
// Open version; color 0 edges allowed (and keep Feynman graphs Feynman graphs).
OpenFeynmanGraph connected_sum(const OpenFeynmanGraph& g1, EdgeRef e, const OpenFeynmanGraph& g2,
                               EdgeRef f);

// Result of the edge removal b (-) e: both endpoints deleted together with all
// parallel edges between them, remaining edges glued colorwise.
struct DipoleRemoval {
    ColoredGraph graph;
    std::vector<int> parallel_colors;          // I(e), ascending
    int removed_white = -1, removed_black = -1;
    std::vector<int> old_white_index;          // new white -> old white
    std::vector<int> old_black_index;
    // Gluing record: for each color not in I(e), the surviving pair
    // (old white whose edge entered t(e), old black that the edge from s(e) hit).
    std::vector<std::array<int, 3>> glued;     // {color, old_white, old_black}
};

DipoleRemoval remove_dipole(const ColoredGraph& b, EdgeRef e);

// The separatrix gadget S: a 4-leg open graph of the quartic melonic model,
// two bubbles (V_1 and V_2) bridged by two internal propagators.  Its boundary
// is a pair of dipoles pairing (leg_g, leg_v) and (leg_h, leg_w), which is what
// makes boundary components separate across it.
struct Separatrix {
    OpenFeynmanGraph graph;
    int leg_g, leg_v; // white/black legs of the first pair
    int leg_h, leg_w; // white/black legs of the second pair
};

Separatrix separatrix(int rank);

// The pretzel P: the separatrix with both leg pairs self-contracted by color 0.
// A vacuum graph of the model with vanishing degree; k and l name the two
// contraction propagators used when splicing P between two graphs.
struct Pretzel {
    OpenFeynmanGraph graph;
    EdgeRef k, l;
};

Pretzel pretzel(int rank);

// g # P # L along color-0 edges, for a vacuum graph L of the same model:
// raises the degree while keeping boundary(g) unchanged.
OpenFeynmanGraph degree_bump(const OpenFeynmanGraph& g, const OpenFeynmanGraph& vacuum);

// First internal color-0 edge, by white index; throws if the graph has none.
EdgeRef first_internal_propagator(const OpenFeynmanGraph& g);

}  // namespace ctm

#endif  // CTM_SURGERY_HPP
