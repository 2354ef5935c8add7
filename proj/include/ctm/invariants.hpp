#ifndef CTM_INVARIANTS_HPP
#define CTM_INVARIANTS_HPP

#include <map>
#include <utility>
#include <vector>

#include "ctm/graph.hpp"
#include "ctm/rational.hpp"

namespace ctm {

// Faces are the 2-bubbles: the face count of the pair {c,d} is the number of
// cycles of sigma_d^-1 o sigma_c on white vertices.
struct FaceReport {
    std::map<std::pair<int, int>, int> per_pair; // keyed by (c,d) with c < d
    long long total = 0;
};

FaceReport faces(const ColoredGraph& g);

// A jacket is the ribbon graph keeping only the faces whose color pair is
// consecutive in a cyclic order of the colors; cyclic orders are classed up to
// rotation and reflection, giving (C-1)!/2 jackets for C colors.
struct JacketReport {
    std::vector<int> cycle;        // class representative, cycle[0] = smallest color
    long long face_count = 0;
    long long euler_characteristic = 0;
    long long genus = 0;           // summed over connected components
};

// Requires at least 3 colors (for C = 3 the unique jacket is the graph itself).
std::vector<JacketReport> jackets(const ColoredGraph& g);

struct DegreeReport {
    long long omega = 0;
    std::vector<long long> jacket_genera; // one entry per jacket class
    long long face_total = 0;
    bool face_formula_consistent = false;
};

// Gurau degree: the sum of all jacket genera.  Cross-checked against the
// face-counting formula |faces| = C(D,2)|V|/2 + D - 2 omega/(D-1)! with
// D = colors - 1; a mismatch is an internal error.  Disconnected input is
// handled per component and summed.
DegreeReport degree_report(const ColoredGraph& g);
long long gurau_degree(const ColoredGraph& g);

bool is_melon(const ColoredGraph& g);

// Large-N scaling exponent D - 2 omega/(D-1)!, with D = colors - 1.
Rational amplitude_exponent(const ColoredGraph& g);

}  // namespace ctm

#endif  // CTM_INVARIANTS_HPP
