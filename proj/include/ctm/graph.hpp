#ifndef CTM_GRAPH_HPP
#define CTM_GRAPH_HPP

#include <span>
#include <string>
#include <vector>

#include "ctm/permutation.hpp"

namespace ctm {

// Closed bipartite graph with edges properly colored by {1..rank}: every white
// vertex meets exactly one edge of each color, and the color-c edge at white w
// ends at black sigma(c)[w].  Regularity and bipartiteness are built into the
// encoding; a disconnected graph is simply one whose walk group is intransitive.
struct ColoredGraph {
    int rank = 0;            // number of edge colors, labeled 1..rank
    int half_order = 0;      // white vertex count == black vertex count
    std::vector<Perm> perms; // perms[c-1][w] = black end of the color-c edge at white w

    ColoredGraph() = default;
    ColoredGraph(int rank_, int half_order_, std::vector<Perm> perms_)
        : rank(rank_), half_order(half_order_), perms(std::move(perms_)) {}

    const Perm& sigma(int color) const { return perms[color - 1]; }
    Perm& sigma(int color) { return perms[color - 1]; }

    bool empty() const { return half_order == 0; }

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
        return a.rank == b.rank && a.half_order == b.half_order && a.perms == b.perms;
    }
};

// Open (rank+1)-colored graph: the colors 1..rank are full permutations, color 0
// is a partial injective matching (prop0[w] = black end of the internal color-0
// propagator at white w, or -1).  Unmatched vertices are the external legs; the
// valence-1 external vertices themselves are never materialized.
struct OpenFeynmanGraph {
    int rank = 0;
    int half_order = 0;      // internal white count == internal black count
    std::vector<Perm> perms; // colors 1..rank
    std::vector<int> prop0;  // size half_order, entries in {0..half_order-1} or -1

    OpenFeynmanGraph() = default;
    OpenFeynmanGraph(int rank_, int n, std::vector<Perm> perms_, std::vector<int> prop0_)
        : rank(rank_), half_order(n), perms(std::move(perms_)), prop0(std::move(prop0_)) {}

    const Perm& sigma(int color) const { return perms[color - 1]; }

    bool is_closed() const {
        for (int v : prop0)
            if (v < 0) return false;
        return true;
    }

    std::vector<int> unmatched_whites() const;
    std::vector<int> unmatched_blacks() const;
    // Half the number of external legs.
    int leg_pairs() const { return static_cast<int>(unmatched_whites().size()); }

    friend bool operator==(const OpenFeynmanGraph& a, const OpenFeynmanGraph& b) {
        return a.rank == b.rank && a.half_order == b.half_order && a.perms == b.perms &&
               a.prop0 == b.prop0;
    }
};

struct ValidityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidityReport validate(const ColoredGraph& g);
ValidityReport validate(const OpenFeynmanGraph& g);
void require_valid(const ColoredGraph& g);
void require_valid(const OpenFeynmanGraph& g);

// --- connectivity & bubbles ------------------------------------------------

struct VertexPartition {
    int count = 0;               // number of connected components
    std::vector<int> white_comp; // component id per white vertex
    std::vector<int> black_comp;
};

VertexPartition component_partition(const ColoredGraph& g, std::span<const int> colors);
VertexPartition component_partition(const ColoredGraph& g); // all colors
// Components of an open graph; color 0 (prop0) participates iff include_color0.
VertexPartition component_partition(const OpenFeynmanGraph& g, bool include_color0);

bool is_connected(const ColoredGraph& g);
bool is_connected(const OpenFeynmanGraph& g, bool include_color0 = true);

// A q-bubble: connected component of the subgraph spanned by a color subset.
// The bubble is re-encoded as a |colors|-colored graph (local color i+1 is
// original colors[i]); whites/blacks map local indices back to g.
struct Bubble {
    ColoredGraph graph;
    std::vector<int> colors;
    std::vector<int> whites;
    std::vector<int> blacks;
};

std::vector<Bubble> bubbles(const ColoredGraph& g, std::span<const int> colors);

// Decomposition into connected components over all colors, in order of the
// smallest white vertex.  flatten() re-concatenates (whites of component k are
// offset by the sizes of components 0..k-1).
struct Decomposition {
    std::vector<ColoredGraph> components;
    std::vector<std::vector<int>> whites; // original indices per component
    std::vector<std::vector<int>> blacks;
};

Decomposition decompose(const ColoredGraph& g);

// Multiset of connected graphs of equal rank.
struct DisconnectedGraph {
    int rank = 0;
    std::vector<ColoredGraph> components;
};

ColoredGraph flatten(const DisconnectedGraph& d);
DisconnectedGraph split_components(const ColoredGraph& g);

// --- conversions ------------------------------------------------------------

// Colors 1..rank of an open graph, as a closed graph (drops color 0 entirely).
ColoredGraph interaction_part(const OpenFeynmanGraph& g);

// A closed (rank+1)-colored view of a vacuum graph: color 0 becomes color 1,
// interaction color c becomes c+1.  Requires full prop0.
ColoredGraph to_closed(const OpenFeynmanGraph& g);

// --- interaction models -----------------------------------------------------

// A set Omega of allowed interaction bubbles for a rank-D tensor model.
struct InteractionModel {
    int rank = 0;
    std::vector<ColoredGraph> bubbles;
    std::vector<std::string> bubble_keys; // canonical keys, parallel to bubbles
    bool quartic_melonic = false;         // true for the phi^4_{D,m} vertex set
    // The kinetic-term difference E(p..m_a..) - E(p..n_a..) depends only on
    // (m_a, n_a); required by the momentum-space identities generated here.
    bool diagonal_kinetic_term = true;

    static InteractionModel phi4_melonic(int rank);
    bool contains(const ColoredGraph& bubble) const;
};

// Membership test for Feynman graphs of a model: every residue over colors
// 1..rank must be one of the model's bubbles, and at least one internal
// color-0 propagator must be present.
bool is_feynman_graph(const OpenFeynmanGraph& g, const InteractionModel& m);

// --- standard small graphs ---------------------------------------------------

// The 2-vertex graph (one white, one black, every color a parallel edge).
ColoredGraph dipole(int rank);
// Quartic melonic vertex V_k: 4 vertices, color k crosses, all others parallel.
ColoredGraph melonic_quartic(int rank, int k);
// The colored utility graph K_c(3,3): 3 colors, 6 vertices.
ColoredGraph colored_k33();
// The rank-4 necklace: sigma_1 = sigma_2 = id, sigma_3 = sigma_4 = (0 1).
ColoredGraph necklace();
// The necklace reread as a rank-3 vacuum Feynman graph (color 4 -> color 0).
OpenFeynmanGraph necklace_vacuum();

}  // namespace ctm

#endif  // CTM_GRAPH_HPP
