#ifndef CTM_CANONICAL_HPP
#define CTM_CANONICAL_HPP

#include <string>

#include "ctm/graph.hpp"

namespace ctm {

// Canonical form of a colored graph.  Two graphs have equal keys iff they are
// isomorphic as colored graphs, i.e. iff white/black relabelings (alpha, beta)
// exist with sigma'_c = beta o sigma_c o alpha^-1 for every color c.
//
// Connected graphs are gauge-fixed to sigma_1 = id; the walk maps
// tau_c = sigma_1^-1 o sigma_c are then minimized lexicographically over the
// labelings produced by deterministic color-order traversals seeded at each
// white vertex (at most half_order candidates).  Disconnected graphs are
// canonicalized per component, sorted, and concatenated.
struct CanonicalResult {
    ColoredGraph graph; // canonical representative; sigma_1 = id
    std::string key;    // canonical encoding
    Perm white_relabel; // alpha: canonical index of each original white
    Perm black_relabel; // beta
};

CanonicalResult canonical_form(const ColoredGraph& g);
std::string canonical_key(const ColoredGraph& g);
std::string canonical_key(const DisconnectedGraph& d);

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// Serialization of the exact labeled graph (not up to isomorphism); the
// canonical key is encode(canonical_form(g).graph).
std::string encode(const ColoredGraph& g);
ColoredGraph decode(const std::string& key);

// Components sorted by canonical key; each component canonicalized.
DisconnectedGraph canonical_components(const ColoredGraph& g);

ColoredGraph relabel(const ColoredGraph& g, const Perm& alpha, const Perm& beta);

}  // namespace ctm

#endif  // CTM_CANONICAL_HPP
