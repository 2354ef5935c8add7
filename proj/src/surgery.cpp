#include "ctm/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctm {

namespace {

void check_edge(const ColoredGraph& g, EdgeRef e) {
    if (e.color < 1 || e.color > g.rank) throw std::invalid_argument("edge color out of range");
    if (e.white < 0 || e.white >= g.half_order)
        throw std::invalid_argument("edge white index out of range");
}

void check_edge(const OpenFeynmanGraph& g, EdgeRef e) {
    if (e.color < 0 || e.color > g.rank) throw std::invalid_argument("edge color out of range");
    if (e.white < 0 || e.white >= g.half_order)
        throw std::invalid_argument("edge white index out of range");
    if (e.color == 0 && g.prop0[e.white] < 0)
        throw std::invalid_argument("no internal color-0 edge at that white vertex");
}

}  // namespace

ColoredGraph connected_sum(const ColoredGraph& g1, EdgeRef e, const ColoredGraph& g2, EdgeRef f) {
    require_valid(g1);
    require_valid(g2);
    if (g1.rank != g2.rank) throw std::invalid_argument("connected sum needs equal ranks");
    if (e.color != f.color) throw std::invalid_argument("connected sum needs same-colored edges");
    check_edge(g1, e);
    check_edge(g2, f);
    const int n1 = g1.half_order;
    ColoredGraph out;
    out.rank = g1.rank;
    out.half_order = n1 + g2.half_order;
    out.perms.assign(out.rank, Perm(out.half_order));
    for (int c = 0; c < out.rank; ++c) {
        for (int w = 0; w < n1; ++w) out.perms[c][w] = g1.perms[c][w];
        for (int w = 0; w < g2.half_order; ++w) out.perms[c][n1 + w] = g2.perms[c][w] + n1;
    }
    int t1 = g1.sigma(e.color)[e.white];
    int t2 = g2.sigma(f.color)[f.white] + n1;
    out.perms[e.color - 1][e.white] = t2;      // E: s(e) -> t(f)
    out.perms[e.color - 1][f.white + n1] = t1; // F: s(f) -> t(e)
    return out;
}

OpenFeynmanGraph connected_sum(const OpenFeynmanGraph& g1, EdgeRef e, const OpenFeynmanGraph& g2,
                               EdgeRef f) {
    require_valid(g1);
    require_valid(g2);
    if (g1.rank != g2.rank) throw std::invalid_argument("connected sum needs equal ranks");
    if (e.color != f.color) throw std::invalid_argument("connected sum needs same-colored edges");
    check_edge(g1, e);
    check_edge(g2, f);
    const int n1 = g1.half_order;
    OpenFeynmanGraph out;
    out.rank = g1.rank;
    out.half_order = n1 + g2.half_order;
    out.perms.assign(out.rank, Perm(out.half_order));
    out.prop0.assign(out.half_order, -1);
    for (int c = 0; c < out.rank; ++c) {
        for (int w = 0; w < n1; ++w) out.perms[c][w] = g1.perms[c][w];
        for (int w = 0; w < g2.half_order; ++w) out.perms[c][n1 + w] = g2.perms[c][w] + n1;
    }
    for (int w = 0; w < n1; ++w) out.prop0[w] = g1.prop0[w];
    for (int w = 0; w < g2.half_order; ++w)
        out.prop0[n1 + w] = g2.prop0[w] < 0 ? -1 : g2.prop0[w] + n1;
    if (e.color == 0) {
        int t1 = g1.prop0[e.white];
        int t2 = g2.prop0[f.white] + n1;
        out.prop0[e.white] = t2;
        out.prop0[f.white + n1] = t1;
    } else {
        int t1 = g1.sigma(e.color)[e.white];
        int t2 = g2.sigma(f.color)[f.white] + n1;
        out.perms[e.color - 1][e.white] = t2;
        out.perms[e.color - 1][f.white + n1] = t1;
    }
    return out;
}

DipoleRemoval remove_dipole(const ColoredGraph& b, EdgeRef e) {
    require_valid(b);
    check_edge(b, e);
    const int s = e.white;
    const int t = b.sigma(e.color)[s];
    DipoleRemoval out;
    out.removed_white = s;
    out.removed_black = t;
    for (int c = 1; c <= b.rank; ++c)
        if (b.sigma(c)[s] == t) out.parallel_colors.push_back(c);

    const int p = b.half_order;
    std::vector<int> new_white(p, -1), new_black(p, -1);
    for (int w = 0; w < p; ++w) {
        if (w == s) continue;
        new_white[w] = static_cast<int>(out.old_white_index.size());
        out.old_white_index.push_back(w);
    }
    for (int v = 0; v < p; ++v) {
        if (v == t) continue;
        new_black[v] = static_cast<int>(out.old_black_index.size());
        out.old_black_index.push_back(v);
    }
    out.graph.rank = b.rank;
    out.graph.half_order = p - 1;
    out.graph.perms.assign(b.rank, Perm(p - 1));
    for (int c = 1; c <= b.rank; ++c) {
        const Perm& sig = b.sigma(c);
        bool parallel = std::find(out.parallel_colors.begin(), out.parallel_colors.end(), c) !=
                        out.parallel_colors.end();
        if (!parallel)
            out.glued.push_back({c, inverse_perm(sig)[t], sig[s]});
        for (int w = 0; w < p; ++w) {
            if (w == s) continue;
            int v = sig[w];
            if (v == t) v = sig[s]; // glue across the removed pair
            out.graph.perms[c - 1][new_white[w]] = new_black[v];
        }
    }
    return out;
}

Separatrix separatrix(int rank) {
    if (rank < 3) throw std::invalid_argument("separatrix needs rank >= 3");
    // Whites 0,1 / blacks 0,1: a V_1 bubble.  Whites 2,3 / blacks 2,3: a V_2
    // bubble.  Bridge propagators 0->2 and 2->0; legs at whites 1, 3 and
    // blacks 1, 3.
    Separatrix s;
    s.graph.rank = rank;
    s.graph.half_order = 4;
    s.graph.perms.assign(rank, identity_perm(4));
    s.graph.perms[0] = Perm{1, 0, 2, 3};
    s.graph.perms[1] = Perm{0, 1, 3, 2};
    s.graph.prop0 = {2, -1, 0, -1};
    s.leg_g = 1;
    s.leg_v = 1;
    s.leg_h = 3;
    s.leg_w = 3;
    return s;
}

Pretzel pretzel(int rank) {
    Separatrix s = separatrix(rank);
    Pretzel p;
    p.graph = s.graph;
    p.graph.prop0[s.leg_g] = s.leg_v;
    p.graph.prop0[s.leg_h] = s.leg_w;
    p.k = EdgeRef{0, s.leg_g};
    p.l = EdgeRef{0, s.leg_h};
    return p;
}

EdgeRef first_internal_propagator(const OpenFeynmanGraph& g) {
    for (int w = 0; w < g.half_order; ++w)
        if (g.prop0[w] >= 0) return EdgeRef{0, w};
    throw std::invalid_argument("graph has no internal color-0 edge");
}

OpenFeynmanGraph degree_bump(const OpenFeynmanGraph& g, const OpenFeynmanGraph& vacuum) {
    require_valid(g);
    require_valid(vacuum);
    if (!vacuum.is_closed()) throw std::invalid_argument("degree_bump needs a vacuum graph");
    EdgeRef e = first_internal_propagator(g);
    Pretzel p = pretzel(g.rank);
    OpenFeynmanGraph mid = connected_sum(g, e, p.graph, p.k);
    EdgeRef l{0, p.l.white + g.half_order};
    EdgeRef f = first_internal_propagator(vacuum);
    return connected_sum(mid, l, vacuum, f);
}

}  // namespace ctm
