#ifndef CTM_REALIZATION_HPP
#define CTM_REALIZATION_HPP

#include <string>
#include <vector>

#include "ctm/graph.hpp"

namespace ctm {

// A Feynman graph of the quartic melonic model realizing a prescribed
// boundary graph b, together with the leg sites carrying each vertex of b.
struct Realization {
    OpenFeynmanGraph graph;
    std::vector<int> white_leg; // per white vertex of b: its unmatched white site
    std::vector<int> black_leg; // per black vertex of b: its unmatched black site
};

// Connected nonempty b, rank >= 3.  Each vertex of b becomes a chain of
// quartic bubbles ("raceme") with one marked external leg; each color-i edge
// of b becomes the color-0 contractions between the two chains' port pairs.
Realization realize_connected(const ColoredGraph& b);

// Any rank-D graph, disconnected allowed: components are realized separately
// and chained into one connected graph with pretzel gadgets, which keep the
// boundary components disjoint.  The empty graph realizes to a vacuum graph.
Realization realize(const ColoredGraph& b);

struct PipelineComponentReport {
    std::string canonical_key;
    int half_order = 0;
    bool crystallization = false;
    // Abelianized fundamental group, when the component is a crystallization
    // with at least 4 colors.
    int pi1_free_rank = 0;
    std::vector<long long> pi1_torsion;
};

struct PipelineReport {
    OpenFeynmanGraph graph;
    int leg_pairs = 0;
    int boundary_components = 0;
    int total_vertices = 0;
    std::vector<PipelineComponentReport> components;
};

// Realizes b and reports statistics plus per-component fundamental-group
// abelianizations (graph-encoded-manifold view of the boundary).
PipelineReport crystallization_pipeline(const ColoredGraph& b);

}  // namespace ctm

#endif  // CTM_REALIZATION_HPP
