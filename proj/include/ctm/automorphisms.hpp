#ifndef CTM_AUTOMORPHISMS_HPP
#define CTM_AUTOMORPHISMS_HPP

#include <optional>
#include <vector>

#include "ctm/graph.hpp"

namespace ctm {

// A colored automorphism, represented by its white restriction plus the
// (uniquely determined) black permutation.
struct Automorphism {
    Perm white;
    Perm black;
};

// tau lifts iff sigma_c o tau o sigma_c^-1 is the same black permutation for
// every color; the lift is then unique.
std::optional<Automorphism> lift(const ColoredGraph& g, const Perm& tau);

struct AutGroup {
    std::vector<Perm> elements;   // all liftable white permutations
    std::vector<Perm> generators; // a small generating set
    long long order = 0;
};

// For connected graphs the search is seeded by the image of white vertex 0 and
// extended by color walks; for disconnected graphs elements are assembled from
// component automorphisms and same-type component swaps (wreath structure).
AutGroup aut_group(const ColoredGraph& g);

// Group order only.  Disconnected graphs use the closed formula
// prod_i m_i! |Aut(Gamma_i)|^{m_i} over component types.
long long aut_order(const ColoredGraph& g);

// sigma(B) = prod m_i! |Aut(Gamma_i)|^{m_i}; equals aut_order.
long long symmetry_factor(const ColoredGraph& b);
long long symmetry_factor(const DisconnectedGraph& b);

// Builds the rank-2 graph that is a disjoint union of bipartite 2-colored
// cycles of lengths 2j (one entry per cycle) and returns its symmetry factor;
// equals prod_j n_j! j^{n_j} over the multiplicities n_j of each length.
long long cycle_type_symmetry_factor(const std::vector<int>& cycle_js);

}  // namespace ctm

#endif  // CTM_AUTOMORPHISMS_HPP
