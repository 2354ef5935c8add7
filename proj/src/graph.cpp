#include "ctm/graph.hpp"

#include <numeric>
#include <stdexcept>

#include "ctm/canonical.hpp"

namespace ctm {

std::vector<int> OpenFeynmanGraph::unmatched_whites() const {
    std::vector<int> out;
    for (int w = 0; w < half_order; ++w)
        if (prop0[w] < 0) out.push_back(w);
    return out;
}

std::vector<int> OpenFeynmanGraph::unmatched_blacks() const {
    std::vector<char> hit(half_order, 0);
    for (int v : prop0)
        if (v >= 0) hit[v] = 1;
    std::vector<int> out;
    for (int b = 0; b < half_order; ++b)
        if (!hit[b]) out.push_back(b);
    return out;
}

ValidityReport validate(const ColoredGraph& g) {
    ValidityReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.violations.push_back(std::move(msg));
    };
    if (g.rank < 2) fail("rank must be at least 2, got " + std::to_string(g.rank));
    if (g.half_order < 0) fail("negative half_order");
    if (static_cast<int>(g.perms.size()) != g.rank)
        fail("expected " + std::to_string(g.rank) + " color maps, got " +
             std::to_string(g.perms.size()));
    for (int c = 1; c <= static_cast<int>(g.perms.size()); ++c) {
        const Perm& p = g.perms[c - 1];
        if (static_cast<int>(p.size()) != g.half_order) {
            fail("color " + std::to_string(c) + " map has wrong length");
            continue;
        }
        if (!is_permutation_vec(p)) fail("color " + std::to_string(c) + " not a permutation");
    }
    return r;
}

ValidityReport validate(const OpenFeynmanGraph& g) {
    ValidityReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.violations.push_back(std::move(msg));
    };
    ColoredGraph inner{g.rank, g.half_order, g.perms};
    ValidityReport ri = validate(inner);
    r.ok = ri.ok;
    r.violations = std::move(ri.violations);
    if (static_cast<int>(g.prop0.size()) != g.half_order) {
        fail("prop0 has wrong length");
        return r;
    }
    std::vector<char> hit(g.half_order, 0);
    for (int w = 0; w < g.half_order; ++w) {
        int b = g.prop0[w];
        if (b < -1 || b >= g.half_order) {
            fail("prop0 image out of range at white " + std::to_string(w));
        } else if (b >= 0) {
            if (hit[b]) fail("prop0 not injective: black " + std::to_string(b) + " hit twice");
            hit[b] = 1;
        }
    }
    return r;
}

void require_valid(const ColoredGraph& g) {
    ValidityReport r = validate(g);
    if (!r.ok) throw std::invalid_argument("invalid colored graph: " + r.violations.front());
}

void require_valid(const OpenFeynmanGraph& g) {
    ValidityReport r = validate(g);
    if (!r.ok) throw std::invalid_argument("invalid open graph: " + r.violations.front());
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

VertexPartition partition_from_uf(UnionFind& uf, int p) {
    VertexPartition out;
    out.white_comp.assign(p, -1);
    out.black_comp.assign(p, -1);
    std::vector<int> label(2 * p, -1);
    for (int v = 0; v < 2 * p; ++v) {
        int root = uf.find(v);
        if (label[root] < 0) label[root] = out.count++;
        (v < p ? out.white_comp[v] : out.black_comp[v - p]) = label[root];
    }
    return out;
}

}  // namespace

VertexPartition component_partition(const ColoredGraph& g, std::span<const int> colors) {
    const int p = g.half_order;
    UnionFind uf(2 * p);
    for (int c : colors) {
        const Perm& s = g.sigma(c);
        for (int w = 0; w < p; ++w) uf.unite(w, p + s[w]);
    }
    return partition_from_uf(uf, p);
}

VertexPartition component_partition(const ColoredGraph& g) {
    std::vector<int> all(g.rank);
    std::iota(all.begin(), all.end(), 1);
    return component_partition(g, all);
}

VertexPartition component_partition(const OpenFeynmanGraph& g, bool include_color0) {
    const int p = g.half_order;
    UnionFind uf(2 * p);
    for (int c = 1; c <= g.rank; ++c) {
        const Perm& s = g.sigma(c);
        for (int w = 0; w < p; ++w) uf.unite(w, p + s[w]);
    }
    if (include_color0)
        for (int w = 0; w < p; ++w)
            if (g.prop0[w] >= 0) uf.unite(w, p + g.prop0[w]);
    return partition_from_uf(uf, p);
}

bool is_connected(const ColoredGraph& g) {
    return g.half_order > 0 && component_partition(g).count == 1;
}

bool is_connected(const OpenFeynmanGraph& g, bool include_color0) {
    return g.half_order > 0 && component_partition(g, include_color0).count == 1;
}

std::vector<Bubble> bubbles(const ColoredGraph& g, std::span<const int> colors) {
    VertexPartition part = component_partition(g, colors);
    std::vector<Bubble> out(part.count);
    const int q = static_cast<int>(colors.size());
    std::vector<int> white_local(g.half_order), black_local(g.half_order);
    for (int w = 0; w < g.half_order; ++w) {
        Bubble& b = out[part.white_comp[w]];
        white_local[w] = static_cast<int>(b.whites.size());
        b.whites.push_back(w);
    }
    for (int v = 0; v < g.half_order; ++v) {
        Bubble& b = out[part.black_comp[v]];
        black_local[v] = static_cast<int>(b.blacks.size());
        b.blacks.push_back(v);
    }
    for (Bubble& b : out) {
        b.colors.assign(colors.begin(), colors.end());
        b.graph.rank = q;
        b.graph.half_order = static_cast<int>(b.whites.size());
        b.graph.perms.assign(q, Perm(b.whites.size()));
    }
    for (int ci = 0; ci < q; ++ci) {
        const Perm& s = g.sigma(colors[ci]);
        for (int w = 0; w < g.half_order; ++w) {
            Bubble& b = out[part.white_comp[w]];
            b.graph.perms[ci][white_local[w]] = black_local[s[w]];
        }
    }
    return out;
}

Decomposition decompose(const ColoredGraph& g) {
    std::vector<int> all(g.rank);
    std::iota(all.begin(), all.end(), 1);
    std::vector<Bubble> bs = bubbles(g, all);
    Decomposition d;
    for (Bubble& b : bs) {
        d.components.push_back(std::move(b.graph));
        d.whites.push_back(std::move(b.whites));
        d.blacks.push_back(std::move(b.blacks));
    }
    return d;
}

ColoredGraph flatten(const DisconnectedGraph& d) {
    ColoredGraph g;
    g.rank = d.rank;
    g.perms.assign(d.rank, {});
    for (const ColoredGraph& c : d.components) {
        int off = g.half_order;
        for (int col = 0; col < d.rank; ++col)
            for (int v : c.perms[col]) g.perms[col].push_back(v + off);
        g.half_order += c.half_order;
    }
    return g;
}

DisconnectedGraph split_components(const ColoredGraph& g) {
    DisconnectedGraph d;
    d.rank = g.rank;
    d.components = decompose(g).components;
    return d;
}

ColoredGraph interaction_part(const OpenFeynmanGraph& g) {
    return ColoredGraph{g.rank, g.half_order, g.perms};
}

ColoredGraph to_closed(const OpenFeynmanGraph& g) {
    if (!g.is_closed()) throw std::invalid_argument("to_closed requires a vacuum graph");
    std::vector<Perm> perms;
    perms.reserve(g.rank + 1);
    perms.push_back(g.prop0);
    for (const Perm& s : g.perms) perms.push_back(s);
    return ColoredGraph{g.rank + 1, g.half_order, std::move(perms)};
}

InteractionModel InteractionModel::phi4_melonic(int rank) {
    if (rank < 2) throw std::invalid_argument("model rank must be at least 2");
    InteractionModel m;
    m.rank = rank;
    m.quartic_melonic = true;
    for (int k = 1; k <= rank; ++k) {
        m.bubbles.push_back(melonic_quartic(rank, k));
        m.bubble_keys.push_back(canonical_key(m.bubbles.back()));
    }
    return m;
}

bool InteractionModel::contains(const ColoredGraph& bubble) const {
    std::string key = canonical_key(bubble);
    for (const std::string& k : bubble_keys)
        if (k == key) return true;
    return false;
}

bool is_feynman_graph(const OpenFeynmanGraph& g, const InteractionModel& m) {
    if (g.rank != m.rank) return false;
    if (validate(g).ok == false) return false;
    bool has_internal = false;
    for (int v : g.prop0)
        if (v >= 0) has_internal = true;
    if (!has_internal) return false;
    std::vector<int> all(g.rank);
    std::iota(all.begin(), all.end(), 1);
    for (const Bubble& b : bubbles(interaction_part(g), all))
        if (!m.contains(b.graph)) return false;
    return true;
}

ColoredGraph dipole(int rank) {
    return ColoredGraph{rank, 1, std::vector<Perm>(rank, Perm{0})};
}

ColoredGraph melonic_quartic(int rank, int k) {
    if (k < 1 || k > rank) throw std::invalid_argument("vertex color out of range");
    std::vector<Perm> perms(rank, identity_perm(2));
    perms[k - 1] = transposition(2, 0, 1);
    return ColoredGraph{rank, 2, std::move(perms)};
}

ColoredGraph colored_k33() {
    // sigma_1 = id, sigma_2 = (0 2 1), sigma_3 = (0 1 2)
    return ColoredGraph{3, 3, {identity_perm(3), Perm{2, 0, 1}, Perm{1, 2, 0}}};
}

ColoredGraph necklace() {
    return ColoredGraph{
        4, 2, {identity_perm(2), identity_perm(2), transposition(2, 0, 1), transposition(2, 0, 1)}};
}

OpenFeynmanGraph necklace_vacuum() {
    ColoredGraph n = necklace();
    return OpenFeynmanGraph{3, 2, {n.perms[0], n.perms[1], n.perms[2]}, n.perms[3]};
}

}  // namespace ctm
