#ifndef CTM_BOUNDARY_HPP
#define CTM_BOUNDARY_HPP

#include "ctm/graph.hpp"

namespace ctm {

// Boundary graph of an open graph, with the correspondence between boundary
// vertices and the external-leg sites they came from.  A boundary vertex
// arising from an unmatched internal white vertex is a white boundary vertex.
struct BoundaryResult {
    ColoredGraph graph;
    std::vector<int> white_leg; // boundary white i -> unmatched internal white
    std::vector<int> black_leg; // boundary black j -> unmatched internal black
};

// For each color k and unmatched white site, follows the alternating
// (color-k, color-0) walk to an unmatched black site; the walk terminates
// because prop0 is injective.  Closed graphs have empty boundary.
BoundaryResult boundary(const OpenFeynmanGraph& g);

// Adds an external color-0 leg to every vertex: same colors-1..D structure,
// empty prop0.  boundary(cone(b)) == b on the nose.
OpenFeynmanGraph cone(const ColoredGraph& b);

// Drops external legs.  Legs are never materialized in this encoding, so this
// is the identity on the internal structure; kept for API parity.
OpenFeynmanGraph amputate(const OpenFeynmanGraph& g);

}  // namespace ctm

#endif  // CTM_BOUNDARY_HPP
