#ifndef CTM_WTI_HPP
#define CTM_WTI_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ctm/graph.hpp"
#include "ctm/rational.hpp"
#include "ctm/surgery.hpp"

namespace ctm {

// One term of the boundary-graph expansion of the free energy: the correlation
// function indexed by a boundary class enters with coefficient 1/sigma(B).
struct ExpansionTerm {
    ColoredGraph boundary; // canonical representative
    std::string key;
    Rational coefficient;
    int order = 0; // number of boundary vertices, 2k
};

// All terms up to max_order vertices.  For the quartic melonic models the
// boundary sector is the whole set of rank-D graphs, so the terms run over
// every isomorphism class (connected or not).
std::vector<ExpansionTerm> free_energy_terms(const InteractionModel& model, int max_order);

// The source monomial J(B): one momentum slot per white vertex; black momenta
// resolve through the edges, with black vertex alpha tied to white alpha by
// color 1.  black_sources[b][c-1] is the white slot whose color-c component
// the black vertex b carries.
struct SourceMonomial {
    ColoredGraph graph; // relabeled so that sigma_1 = id
    int slots = 0;
    std::vector<std::vector<int>> black_sources;
};

SourceMonomial source_monomial(const ColoredGraph& b);

// d/dQ applied to the source monomial of R at zero sources: vanishes unless
// R and Q are isomorphic, else one Kronecker-delta product per automorphism.
struct GraphDerivative {
    bool nonzero = false;
    std::vector<Perm> slot_permutations; // white-slot permutations, one per term
};

GraphDerivative graph_derivative(const ColoredGraph& r, const ColoredGraph& q);

// Momentum substitution for one slot of a Delta operator: the distinguished
// entry m_a, a fresh summation index, or a component of a surviving slot.
struct ZEntry {
    enum class Kind { Fixed, Summed, Boundary };
    Kind kind = Kind::Fixed;
    int color = 0;
    int kappa = -1; // surviving-slot index (Boundary entries only)
};

// The index bookkeeping of removing the color-a edge at white vertex r of a
// boundary graph: parallel colors I(e), the xi/kappa maps for the glued
// colors, the substitution z^r, and the residual graph B (-) e.
struct DeltaBookkeeping {
    int r = 0;
    int color = 0;
    std::vector<int> parallel_colors; // I(e)
    std::vector<int> summed_colors;   // I(e) minus {a}
    std::map<int, int> xi;            // color -> white vertex hit through t(e)
    std::map<int, int> kappa;         // color -> its index after removal
    std::vector<ZEntry> z;            // one entry per color 1..D
    ColoredGraph residual;
    std::string residual_key;
};

DeltaBookkeeping delta_bookkeeping(const ColoredGraph& b, int r, int a);

// One term of the Y part of the full Ward-Takahashi identity.
struct YTerm {
    ColoredGraph boundary;
    std::string boundary_key;
    int r = 0;     // white vertex of the boundary class the edge is removed at
    int color = 0; // the broken color a
    Rational coefficient; // 1/|Aut_c(B)|
    DeltaBookkeeping core;
};

// Y-terms for every boundary class with at most max_order vertices and every
// white vertex; disconnected classes use the flattened vertex order, so the
// edge removal lands in the right component automatically.
std::vector<YTerm> y_expansion(const InteractionModel& model, int color, int max_order);

std::string render(const YTerm& term);

// Structured inventory of the closed two-point equation of the rank-3 quartic
// model with diagonal kinetic term.
struct SDETerm {
    enum class Category {
        FreePropagator,
        TadpoleSum,
        FourPointSummed,
        DisconnectedPair,
        DifferenceQuotient,
        CoincidentFourPoint,
    };
    Category category;
    int color = 0;            // 0 for the free term
    std::string green;        // which correlation function enters
    std::string args;         // argument substitution pattern
    std::string summed;       // summed indices
    std::string kernel;       // difference-quotient kernel, when present
    int multiplicity = 1;
    int sign = +1;
    std::string prefactor;

    std::string render() const;
};

struct SDETermInventory {
    std::vector<SDETerm> terms;
    std::array<int, 6> category_counts() const;
};

SDETermInventory sde_two_point_terms(int rank);
// Model-checked variant: demands the quartic rank-3 model and a kinetic term
// whose differences E(..m_a..) - E(..n_a..) depend on (m_a, n_a) only.
SDETermInventory sde_two_point_terms(const InteractionModel& model);

}  // namespace ctm

#endif  // CTM_WTI_HPP
