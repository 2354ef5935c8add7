#ifndef CTM_PI1_HPP
#define CTM_PI1_HPP

#include <vector>

#include "ctm/graph.hpp"

namespace ctm {

// Finitely presented group: relators are words over signed generator letters,
// letter +(k+1) / -(k+1) standing for x_k / x_k^-1.
struct GroupPresentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

// A crystallization has exactly one residue per dropped color: for every
// color c, the restriction to the remaining colors is connected.
bool is_crystallization(const ColoredGraph& g);

struct GagliardiOptions {
    int drop_generator = -1; // -1: the last residue
    int drop_relation = -1;  // -1: the last {i,j}-cycle (by smallest white vertex)
};

// Fundamental-group presentation of a crystallization with >= 4 colors:
// generators are the {i,j}-complement residues; each {i,j}-bicolored cycle
// contributes the word reading off residue membership around the cycle
// (+1 at black vertices, -1 at white ones).  One relation is dropped and the
// dropped generator is killed by a length-1 relator.
GroupPresentation gagliardi_presentation(const ColoredGraph& g, int i, int j,
                                         const GagliardiOptions& opt = {});

// The words of all {i,j}-cycles (before dropping), for inspection.
std::vector<std::vector<int>> gagliardi_words(const ColoredGraph& g, int i, int j);

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<long long> torsion; // invariant factors d_1 | d_2 | ..., each > 1

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// Smith normal form of the relator exponent matrix; exact integer arithmetic.
AbelianInvariants abelianization(const GroupPresentation& p);

// Free reduction, removal of trivial relators, substitution of length-1
// relators; every step is a Tietze move, so the presented group is unchanged.
GroupPresentation tietze_simplify(const GroupPresentation& p);

// Small catalog of 4-colored crystallizations.  Each graph is connected, has
// one residue per color, and every 3-color residue is a 2-sphere, so it
// encodes a closed orientable 3-manifold; the manifold is pinned down by the
// fundamental group.
ColoredGraph crystallization_s3();      // 2 vertices, trivial group
ColoredGraph crystallization_s2xs1();   // 8 vertices, group Z
ColoredGraph crystallization_lens31();  // 12 vertices, group Z/3

}  // namespace ctm

#endif  // CTM_PI1_HPP
