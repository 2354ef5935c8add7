#include "ctm/boundary.hpp"

#include <stdexcept>

namespace ctm {

BoundaryResult boundary(const OpenFeynmanGraph& g) {
    require_valid(g);
    BoundaryResult r;
    r.white_leg = g.unmatched_whites();
    r.black_leg = g.unmatched_blacks();
    const int p = static_cast<int>(r.white_leg.size());

    std::vector<int> white_index(g.half_order, -1), black_index(g.half_order, -1);
    for (int i = 0; i < p; ++i) white_index[r.white_leg[i]] = i;
    for (int i = 0; i < p; ++i) black_index[r.black_leg[i]] = i;
    std::vector<int> prop0_inv(g.half_order, -1);
    for (int w = 0; w < g.half_order; ++w)
        if (g.prop0[w] >= 0) prop0_inv[g.prop0[w]] = w;

    r.graph.rank = g.rank;
    r.graph.half_order = p;
    r.graph.perms.assign(g.rank, Perm(p));
    for (int k = 1; k <= g.rank; ++k) {
        const Perm& s = g.sigma(k);
        for (int i = 0; i < p; ++i) {
            int b = s[r.white_leg[i]];
            while (prop0_inv[b] >= 0) b = s[prop0_inv[b]];
            r.graph.perms[k - 1][i] = black_index[b];
        }
    }
    return r;
}

OpenFeynmanGraph cone(const ColoredGraph& b) {
    require_valid(b);
    return OpenFeynmanGraph{b.rank, b.half_order, b.perms,
                            std::vector<int>(b.half_order, -1)};
}

OpenFeynmanGraph amputate(const OpenFeynmanGraph& g) {
    require_valid(g);
    return g;
}

}  // namespace ctm
