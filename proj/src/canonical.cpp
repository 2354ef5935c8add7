#include "ctm/canonical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ctm {

ColoredGraph relabel(const ColoredGraph& g, const Perm& alpha, const Perm& beta) {
    ColoredGraph out;
    out.rank = g.rank;
    out.half_order = g.half_order;
    out.perms.assign(g.rank, Perm(g.half_order));
    for (int c = 0; c < g.rank; ++c)
        for (int w = 0; w < g.half_order; ++w) out.perms[c][alpha[w]] = beta[g.perms[c][w]];
    return out;
}

std::string encode(const ColoredGraph& g) {
    std::ostringstream os;
    os << "g" << g.rank << ":" << g.half_order;
    for (int c = 1; c <= g.rank; ++c) {
        os << (c == 1 ? "|" : ";");
        const Perm& s = g.sigma(c);
        for (int w = 0; w < g.half_order; ++w) {
            if (w) os << ",";
            os << s[w];
        }
    }
    return os.str();
}

ColoredGraph decode(const std::string& key) {
    std::istringstream is(key);
    char ch;
    ColoredGraph g;
    if (!(is >> ch) || ch != 'g') throw std::invalid_argument("bad graph key");
    char sep;
    if (!(is >> g.rank >> sep >> g.half_order) || sep != ':')
        throw std::invalid_argument("bad graph key header");
    if (g.rank < 2 || g.half_order < 0) throw std::invalid_argument("bad graph key header");
    g.perms.assign(g.rank, Perm());
    for (int c = 1; c <= g.rank; ++c) {
        if (!(is >> sep) || (sep != '|' && sep != ';'))
            throw std::invalid_argument("bad graph key separator");
        Perm& s = g.perms[c - 1];
        s.resize(g.half_order);
        for (int w = 0; w < g.half_order; ++w) {
            if (w && (!(is >> sep) || sep != ','))
                throw std::invalid_argument("bad graph key image list");
            if (!(is >> s[w])) throw std::invalid_argument("bad graph key image");
        }
    }
    require_valid(g);
    return g;
}

namespace {

// Walk maps tau_c = sigma_1^-1 o sigma_c acting on whites, c = 2..rank.
std::vector<Perm> walk_maps(const ColoredGraph& g) {
    Perm inv1 = inverse_perm(g.sigma(1));
    std::vector<Perm> taus;
    taus.reserve(g.rank - 1);
    for (int c = 2; c <= g.rank; ++c) taus.push_back(compose_perm(inv1, g.sigma(c)));
    return taus;
}

// Deterministic traversal labeling seeded at `start`: labels are assigned in
// BFS discovery order, scanning colors in ascending order.  For a connected
// graph every white vertex gets a label.
Perm traversal_labeling(const std::vector<Perm>& taus, int p, int start) {
    Perm label(p, -1);
    std::vector<int> queue;
    queue.reserve(p);
    label[start] = 0;
    queue.push_back(start);
    for (int qi = 0; qi < static_cast<int>(queue.size()); ++qi) {
        int u = queue[qi];
        for (const Perm& tau : taus) {
            int v = tau[u];
            if (label[v] < 0) {
                label[v] = static_cast<int>(queue.size());
                queue.push_back(v);
            }
        }
    }
    if (static_cast<int>(queue.size()) != p)
        throw std::logic_error("traversal labeling on a disconnected graph");
    return label;
}

// The tuple (tau_2..tau_D) conjugated by `label`, flattened for comparison.
std::vector<int> relabeled_tuple(const std::vector<Perm>& taus, const Perm& label) {
    const int p = static_cast<int>(label.size());
    std::vector<int> flat;
    flat.reserve(taus.size() * p);
    for (const Perm& tau : taus) {
        std::vector<int> img(p);
        for (int w = 0; w < p; ++w) img[label[w]] = label[tau[w]];
        flat.insert(flat.end(), img.begin(), img.end());
    }
    return flat;
}

CanonicalResult canonical_connected(const ColoredGraph& g) {
    const int p = g.half_order;
    std::vector<Perm> taus = walk_maps(g);
    std::vector<int> best;
    Perm best_label;
    for (int start = 0; start < p; ++start) {
        Perm label = traversal_labeling(taus, p, start);
        std::vector<int> flat = relabeled_tuple(taus, label);
        if (best.empty() || flat < best) {
            best = std::move(flat);
            best_label = std::move(label);
        }
    }
    CanonicalResult r;
    r.graph.rank = g.rank;
    r.graph.half_order = p;
    r.graph.perms.assign(g.rank, Perm(p));
    r.graph.perms[0] = identity_perm(p);
    for (int c = 2; c <= g.rank; ++c)
        std::copy_n(best.begin() + static_cast<long>(c - 2) * p, p, r.graph.perms[c - 1].begin());
    r.white_relabel = best_label;
    r.black_relabel = compose_perm(best_label, inverse_perm(g.sigma(1)));
    r.key = encode(r.graph);
    return r;
}

}  // namespace

CanonicalResult canonical_form(const ColoredGraph& g) {
    require_valid(g);
    if (g.half_order == 0) {
        CanonicalResult r;
        r.graph = g;
        r.key = encode(g);
        return r;
    }
    Decomposition dec = decompose(g);
    if (dec.components.size() == 1) {
        CanonicalResult r = canonical_connected(g);
        return r;
    }
    struct Piece {
        CanonicalResult canon;
        const std::vector<int>* whites;
        const std::vector<int>* blacks;
    };
    std::vector<Piece> pieces;
    pieces.reserve(dec.components.size());
    for (size_t i = 0; i < dec.components.size(); ++i)
        pieces.push_back({canonical_connected(dec.components[i]), &dec.whites[i], &dec.blacks[i]});
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.canon.key < b.canon.key; });

    CanonicalResult r;
    r.graph.rank = g.rank;
    r.graph.perms.assign(g.rank, {});
    r.white_relabel.assign(g.half_order, -1);
    r.black_relabel.assign(g.half_order, -1);
    for (const Piece& piece : pieces) {
        int off = r.graph.half_order;
        const ColoredGraph& cg = piece.canon.graph;
        for (int c = 0; c < g.rank; ++c)
            for (int v : cg.perms[c]) r.graph.perms[c].push_back(v + off);
        for (size_t local = 0; local < piece.whites->size(); ++local) {
            r.white_relabel[(*piece.whites)[local]] =
                off + piece.canon.white_relabel[static_cast<int>(local)];
            r.black_relabel[(*piece.blacks)[local]] =
                off + piece.canon.black_relabel[static_cast<int>(local)];
        }
        r.graph.half_order += cg.half_order;
    }
    r.key = encode(r.graph);
    return r;
}

std::string canonical_key(const ColoredGraph& g) { return canonical_form(g).key; }

std::string canonical_key(const DisconnectedGraph& d) { return canonical_key(flatten(d)); }

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.rank != b.rank || a.half_order != b.half_order) return false;
    return canonical_key(a) == canonical_key(b);
}

DisconnectedGraph canonical_components(const ColoredGraph& g) {
    DisconnectedGraph d;
    d.rank = g.rank;
    for (ColoredGraph& c : decompose(g).components) {
        d.components.push_back(canonical_form(c).graph);
    }
    std::sort(d.components.begin(), d.components.end(),
              [](const ColoredGraph& a, const ColoredGraph& b) { return encode(a) < encode(b); });
    return d;
}

}  // namespace ctm
