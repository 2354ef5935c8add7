#include "ctm/realization.hpp"

#include <stdexcept>

#include "ctm/boundary.hpp"
#include "ctm/canonical.hpp"
#include "ctm/pi1.hpp"
#include "ctm/surgery.hpp"

namespace ctm {

namespace {

// Index helpers for the raceme of one boundary vertex.  A raceme is a chain
// of D-1 bubbles (bubble i is a V_i vertex); each bubble occupies two local
// whites [straight, cross] and two local blacks [straight, cross].
struct RacemeLayout {
    int base_white; // global index of local white 0
    int base_black;
    int white(int bubble, int cross) const { return base_white + 2 * (bubble - 1) + cross; }
    int black(int bubble, int cross) const { return base_black + 2 * (bubble - 1) + cross; }
};

}  // namespace

Realization realize_connected(const ColoredGraph& b) {
    require_valid(b);
    if (b.rank < 3) throw std::invalid_argument("realization needs rank >= 3");
    if (b.empty()) throw std::invalid_argument("empty boundary: use realize() instead");
    if (!is_connected(b)) throw std::invalid_argument("realize_connected needs a connected graph");

    const int d = b.rank;
    const int p = b.half_order;
    const int per_raceme = 2 * (d - 1);

    Realization out;
    OpenFeynmanGraph& g = out.graph;
    g.rank = d;
    g.half_order = 2 * p * per_raceme;
    g.perms.assign(d, Perm(g.half_order));
    g.prop0.assign(g.half_order, -1);

    // Racemes of black vertices of b occupy the first p blocks, racemes of
    // white vertices the next p blocks.
    auto black_raceme = [&](int x) {
        return RacemeLayout{x * per_raceme, x * per_raceme};
    };
    auto white_raceme = [&](int dvert) {
        return RacemeLayout{(p + dvert) * per_raceme, (p + dvert) * per_raceme};
    };

    // Interior of every raceme: bubble i is a V_i vertex.
    auto place_bubbles = [&](const RacemeLayout& r) {
        for (int i = 1; i <= d - 1; ++i)
            for (int c = 1; c <= d; ++c) {
                int crosses = (c == i) ? 1 : 0;
                g.perms[c - 1][r.white(i, 0)] = r.black(i, crosses);
                g.perms[c - 1][r.white(i, 1)] = r.black(i, 1 - crosses);
            }
    };
    for (int x = 0; x < p; ++x) place_bubbles(black_raceme(x));
    for (int dv = 0; dv < p; ++dv) place_bubbles(white_raceme(dv));

    // Internal chain propagators.  Black-vertex raceme: straight white of
    // bubble i feeds the straight black of bubble i+1.  White-vertex raceme:
    // straight white of bubble i+1 feeds the straight black of bubble i.
    for (int x = 0; x < p; ++x) {
        RacemeLayout r = black_raceme(x);
        for (int i = 1; i <= d - 2; ++i) g.prop0[r.white(i, 0)] = r.black(i + 1, 0);
    }
    for (int dv = 0; dv < p; ++dv) {
        RacemeLayout r = white_raceme(dv);
        for (int i = 1; i <= d - 2; ++i) g.prop0[r.white(i + 1, 0)] = r.black(i, 0);
    }

    // One contraction pair per color-i edge of b (i < D), one propagator for
    // color-D edges.  Ports on the black-vertex raceme x: cross white/black of
    // bubble i, plus the straight white of the last bubble for color D.
    // Mirrored ports on the white-vertex raceme.
    for (int i = 1; i <= d; ++i) {
        const Perm& sig = b.sigma(i);
        for (int dv = 0; dv < p; ++dv) {
            int x = sig[dv];
            RacemeLayout rx = black_raceme(x);
            RacemeLayout rd = white_raceme(dv);
            if (i < d) {
                g.prop0[rd.white(i, 1)] = rx.black(i, 1); // q_i^d with b_i^x
                g.prop0[rx.white(i, 1)] = rd.black(i, 1); // p_i^x with c_i^d
            } else {
                g.prop0[rx.white(d - 1, 0)] = rd.black(d - 1, 0); // p_D^x with c_D^d
            }
        }
    }

    // Marked legs: straight black of bubble 1 (black-vertex racemes) and
    // straight white of bubble 1 (white-vertex racemes).
    out.black_leg.resize(p);
    out.white_leg.resize(p);
    for (int x = 0; x < p; ++x) out.black_leg[x] = black_raceme(x).black(1, 0);
    for (int dv = 0; dv < p; ++dv) out.white_leg[dv] = white_raceme(dv).white(1, 0);
    require_valid(g);
    return out;
}

Realization realize(const ColoredGraph& b) {
    require_valid(b);
    if (b.rank < 3) throw std::invalid_argument("realization needs rank >= 3");
    if (b.empty()) {
        Realization r;
        r.graph = pretzel(b.rank).graph;
        return r;
    }
    Decomposition dec = decompose(b);
    std::vector<Realization> parts;
    parts.reserve(dec.components.size());
    for (const ColoredGraph& comp : dec.components) parts.push_back(realize_connected(comp));

    OpenFeynmanGraph acc = parts[0].graph;
    std::vector<int> part_off{0}; // vertex offset of each component's realization
    for (size_t a = 1; a < parts.size(); ++a) {
        // Splice a pretzel cut at its two contraction propagators, then the
        // next component.  The boundary stays the disjoint union because every
        // alternating walk entering the pretzel leaves on the side it entered.
        Pretzel pz = pretzel(b.rank);
        EdgeRef e = first_internal_propagator(acc);
        int n_before = acc.half_order;
        acc = connected_sum(acc, e, pz.graph, pz.k);
        EdgeRef l{0, pz.l.white + n_before};
        part_off.push_back(acc.half_order);
        EdgeRef f = first_internal_propagator(parts[a].graph);
        acc = connected_sum(acc, l, parts[a].graph, f);
    }
    Realization out;
    out.graph = std::move(acc);
    // Reassemble the b-vertex -> leg maps in original vertex order.
    out.white_leg.assign(b.half_order, -1);
    out.black_leg.assign(b.half_order, -1);
    for (size_t c = 0; c < dec.components.size(); ++c)
        for (size_t local = 0; local < dec.whites[c].size(); ++local) {
            out.white_leg[dec.whites[c][local]] =
                parts[c].white_leg[local] + part_off[c];
            out.black_leg[dec.blacks[c][local]] =
                parts[c].black_leg[local] + part_off[c];
        }
    return out;
}

PipelineReport crystallization_pipeline(const ColoredGraph& b) {
    require_valid(b);
    PipelineReport rep;
    Realization r = realize(b);
    rep.graph = r.graph;
    rep.leg_pairs = r.graph.leg_pairs();
    rep.total_vertices = 2 * r.graph.half_order;
    Decomposition dec = decompose(b);
    rep.boundary_components = static_cast<int>(dec.components.size());
    for (const ColoredGraph& comp : dec.components) {
        PipelineComponentReport cr;
        cr.canonical_key = canonical_key(comp);
        cr.half_order = comp.half_order;
        cr.crystallization = is_crystallization(comp);
        if (cr.crystallization && comp.rank >= 4) {
            AbelianInvariants inv = abelianization(gagliardi_presentation(comp, 1, 2));
            cr.pi1_free_rank = inv.free_rank;
            cr.pi1_torsion = inv.torsion;
        }
        rep.components.push_back(std::move(cr));
    }
    return rep;
}

}  // namespace ctm
