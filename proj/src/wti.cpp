#include "ctm/wti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ctm/automorphisms.hpp"
#include "ctm/canonical.hpp"
#include "ctm/enumeration.hpp"

namespace ctm {

namespace {

void require_quartic_melonic(const InteractionModel& model) {
    // Only the quartic melonic models have the full set of rank-D graphs as
    // boundary sector; the expansions below enumerate exactly that set.
    if (!model.quartic_melonic)
        throw std::invalid_argument("boundary-sector expansion implemented for the quartic "
                                    "melonic model only");
}

}  // namespace

std::vector<ExpansionTerm> free_energy_terms(const InteractionModel& model, int max_order) {
    require_quartic_melonic(model);
    if (max_order < 2 || max_order % 2)
        throw std::invalid_argument("order must be a positive even vertex count");
    std::vector<ExpansionTerm> out;
    for (int k = 1; 2 * k <= max_order; ++k) {
        for (ColoredGraph& b : all_classes(model.rank, k)) {
            ExpansionTerm t;
            t.key = encode(b);
            t.coefficient = Rational(1, symmetry_factor(b));
            t.order = 2 * k;
            t.boundary = std::move(b);
            out.push_back(std::move(t));
        }
    }
    return out;
}

SourceMonomial source_monomial(const ColoredGraph& b) {
    require_valid(b);
    SourceMonomial m;
    // Gauge the black labels through color 1, so black alpha pairs white alpha.
    Perm beta = inverse_perm(b.sigma(1));
    m.graph = relabel(b, identity_perm(b.half_order), beta);
    m.slots = b.half_order;
    m.black_sources.assign(b.half_order, std::vector<int>(b.rank));
    for (int c = 1; c <= b.rank; ++c) {
        Perm inv = inverse_perm(m.graph.sigma(c));
        for (int blk = 0; blk < b.half_order; ++blk) m.black_sources[blk][c - 1] = inv[blk];
    }
    return m;
}

GraphDerivative graph_derivative(const ColoredGraph& r, const ColoredGraph& q) {
    require_valid(r);
    require_valid(q);
    GraphDerivative d;
    if (r.rank != q.rank || r.half_order != q.half_order) return d;
    if (canonical_key(r) != canonical_key(q)) return d;
    d.nonzero = true;
    d.slot_permutations = aut_group(r).elements;
    return d;
}

DeltaBookkeeping delta_bookkeeping(const ColoredGraph& b, int r, int a) {
    require_valid(b);
    if (r < 0 || r >= b.half_order) throw std::invalid_argument("vertex index out of range");
    if (a < 1 || a > b.rank) throw std::invalid_argument("color out of range");

    DeltaBookkeeping out;
    out.r = r;
    out.color = a;
    DipoleRemoval rem = remove_dipole(b, EdgeRef{a, r});
    out.parallel_colors = rem.parallel_colors;
    for (int c : rem.parallel_colors)
        if (c != a) out.summed_colors.push_back(c);

    const int t = b.sigma(a)[r];
    for (int i = 1; i <= b.rank; ++i) {
        if (std::find(rem.parallel_colors.begin(), rem.parallel_colors.end(), i) !=
            rem.parallel_colors.end())
            continue;
        int xi = inverse_perm(b.sigma(i))[t];
        out.xi[i] = xi;
        out.kappa[i] = xi < r ? xi : xi - 1;
    }
    out.z.resize(b.rank);
    for (int i = 1; i <= b.rank; ++i) {
        ZEntry& z = out.z[i - 1];
        z.color = i;
        if (i == a) {
            z.kind = ZEntry::Kind::Fixed;
        } else if (out.xi.count(i)) {
            z.kind = ZEntry::Kind::Boundary;
            z.kappa = out.kappa[i];
        } else {
            z.kind = ZEntry::Kind::Summed;
        }
    }
    out.residual = std::move(rem.graph);
    out.residual_key = canonical_key(out.residual);
    return out;
}

std::vector<YTerm> y_expansion(const InteractionModel& model, int color, int max_order) {
    require_quartic_melonic(model);
    if (color < 1 || color > model.rank) throw std::invalid_argument("color out of range");
    std::vector<YTerm> out;
    for (int k = 1; 2 * k <= max_order; ++k) {
        for (const ColoredGraph& b : all_classes(model.rank, k)) {
            long long aut = symmetry_factor(b);
            for (int r = 0; r < k; ++r) {
                YTerm t;
                t.boundary = b;
                t.boundary_key = encode(b);
                t.r = r;
                t.color = color;
                t.coefficient = Rational(1, aut);
                t.core = delta_bookkeeping(b, r, color);
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

std::string render(const YTerm& term) {
    std::ostringstream os;
    os << term.coefficient.str() << " B=" << term.boundary_key << " r=" << term.r
       << " a=" << term.color << " residual=" << term.core.residual_key << " z=[";
    for (size_t i = 0; i < term.core.z.size(); ++i) {
        const ZEntry& z = term.core.z[i];
        if (i) os << "|";
        switch (z.kind) {
            case ZEntry::Kind::Fixed: os << "m" << z.color; break;
            case ZEntry::Kind::Summed: os << "q" << z.color; break;
            case ZEntry::Kind::Boundary: os << "y" << z.kappa << "_" << z.color; break;
        }
    }
    os << "]";
    return os.str();
}

std::string SDETerm::render() const {
    std::ostringstream os;
    os << (sign < 0 ? "-" : "+") << " ";
    if (multiplicity != 1) os << multiplicity << " ";
    switch (category) {
        case Category::FreePropagator: os << "free"; break;
        case Category::TadpoleSum: os << "tadpole c=" << color; break;
        case Category::FourPointSummed: os << "g4-summed c=" << color; break;
        case Category::DisconnectedPair: os << "disconnected-pair c=" << color; break;
        case Category::DifferenceQuotient: os << "difference-quotient c=" << color; break;
        case Category::CoincidentFourPoint: os << "g4-coincident c=" << color; break;
    }
    os << ": " << green << "(" << args << ")";
    if (!summed.empty()) os << " sum over " << summed;
    if (!kernel.empty()) os << " kernel " << kernel;
    if (!prefactor.empty()) os << " prefactor " << prefactor;
    return os.str();
}

std::array<int, 6> SDETermInventory::category_counts() const {
    std::array<int, 6> counts{};
    for (const SDETerm& t : terms) counts[static_cast<int>(t.category)]++;
    return counts;
}

SDETermInventory sde_two_point_terms(const InteractionModel& model) {
    require_quartic_melonic(model);
    if (!model.diagonal_kinetic_term)
        throw std::invalid_argument("two-point equation needs momentum-independent kinetic "
                                    "differences");
    return sde_two_point_terms(model.rank);
}

SDETermInventory sde_two_point_terms(int rank) {
    if (rank != 3)
        throw std::invalid_argument("two-point equation inventory implemented for rank 3");
    const std::string pre = "-2*lambda/(m^2+|x|^2)";
    // (x1,x2,x3) with slot c replaced by v
    auto sub = [](int c, const std::string& v) {
        std::string s = "(";
        for (int i = 1; i <= 3; ++i) {
            if (i > 1) s += ",";
            s += i == c ? v : "x" + std::to_string(i);
        }
        return s + ")";
    };
    // (x_c, a, b) pattern: slot c kept, the other two replaced by sum names
    auto keep_only = [](int c, const std::string& n1, const std::string& n2) {
        std::string s = "(";
        int used = 0;
        for (int i = 1; i <= 3; ++i) {
            if (i > 1) s += ",";
            s += i == c ? "x" + std::to_string(i) : (used++ ? n2 : n1);
        }
        return s + ")";
    };
    SDETermInventory inv;
    inv.terms.push_back({SDETerm::Category::FreePropagator, 0, "1/E", "(x1,x2,x3)", "", "", 1, +1,
                         "1/(m^2+|x|^2)"});
    for (int c = 1; c <= 3; ++c)
        inv.terms.push_back({SDETerm::Category::TadpoleSum, c, "G2(x)*G2",
                             keep_only(c, "k", "l"), "k,l", "", 1, +1, pre});
    for (int c = 1; c <= 3; ++c)
        inv.terms.push_back({SDETerm::Category::FourPointSummed, c, "G4_V" + std::to_string(c),
                             sub(c, "q") + ";(x1,x2,x3)", "q", "", 2, +1, pre});
    for (int c = 1; c <= 3; ++c)
        inv.terms.push_back({SDETerm::Category::DisconnectedPair, c, "G4_|m|m|",
                             "(x1,x2,x3);" + keep_only(c, "b", "c"), "b,c", "", 1, +1, pre});
    for (int c = 1; c <= 3; ++c)
        inv.terms.push_back({SDETerm::Category::DifferenceQuotient, c, "G2",
                             sub(c, "y" + std::to_string(c)) + " - (x1,x2,x3)",
                             "y" + std::to_string(c),
                             "1/(y" + std::to_string(c) + "^2-x" + std::to_string(c) + "^2)", 1,
                             -1, pre});
    for (int c = 1; c <= 3; ++c)
        inv.terms.push_back({SDETerm::Category::CoincidentFourPoint, c,
                             "G4_V" + std::to_string(c), "(x1,x2,x3);(x1,x2,x3)", "", "", 1, +1,
                             pre});
    return inv;
}

}  // namespace ctm
