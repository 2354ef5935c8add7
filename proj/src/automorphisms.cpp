#include "ctm/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ctm/canonical.hpp"
#include "ctm/rational.hpp"

namespace ctm {

std::optional<Automorphism> lift(const ColoredGraph& g, const Perm& tau) {
    require_valid(g);
    if (static_cast<int>(tau.size()) != g.half_order || !is_permutation_vec(tau))
        throw std::invalid_argument("lift candidate is not a white permutation");
    if (g.half_order == 0) return Automorphism{{}, {}};
    // Black permutation induced through color 1.
    Perm beta = compose_perm(g.sigma(1), compose_perm(tau, inverse_perm(g.sigma(1))));
    for (int c = 2; c <= g.rank; ++c) {
        const Perm& s = g.sigma(c);
        for (int w = 0; w < g.half_order; ++w)
            if (beta[s[w]] != s[tau[w]]) return std::nullopt;
    }
    return Automorphism{tau, beta};
}

namespace {

// Walk maps on whites, tau_c = sigma_1^-1 o sigma_c.
std::vector<Perm> walk_maps(const ColoredGraph& g) {
    Perm inv1 = inverse_perm(g.sigma(1));
    std::vector<Perm> taus;
    for (int c = 2; c <= g.rank; ++c) taus.push_back(compose_perm(inv1, g.sigma(c)));
    return taus;
}

// Elements of the automorphism group of a connected graph: each candidate
// image of white 0 extends uniquely along color walks (or fails).
std::vector<Perm> connected_elements(const ColoredGraph& g) {
    const int p = g.half_order;
    std::vector<Perm> taus = walk_maps(g);
    std::vector<Perm> found;
    for (int target = 0; target < p; ++target) {
        Perm tau(p, -1);
        tau[0] = target;
        std::vector<int> queue{0};
        bool ok = true;
        for (int qi = 0; ok && qi < static_cast<int>(queue.size()); ++qi) {
            int u = queue[qi];
            for (const Perm& t : taus) {
                int v = t[u];
                int image = t[tau[u]];
                if (tau[v] < 0) {
                    tau[v] = image;
                    queue.push_back(v);
                } else if (tau[v] != image) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || static_cast<int>(queue.size()) != p) continue;
        if (!is_permutation_vec(tau)) continue;
        if (lift(g, tau)) found.push_back(std::move(tau));
    }
    return found;
}

struct TypeBlock {
    std::string key;
    std::vector<int> comp_ids; // indices into the decomposition
    std::vector<Perm> elements; // automorphisms of the canonical type graph
    int size = 0;               // half_order of the type
};

}  // namespace

AutGroup aut_group(const ColoredGraph& g) {
    require_valid(g);
    AutGroup out;
    if (g.half_order == 0) {
        out.order = 1;
        out.elements.push_back({});
        return out;
    }
    Decomposition dec = decompose(g);
    if (dec.components.size() == 1) {
        out.elements = connected_elements(g);
    } else {
        // Group components by type; copies of one type are mapped through
        // their canonical labelings, so a copy swap is the identity on the
        // canonical graph.
        std::vector<CanonicalResult> canon;
        canon.reserve(dec.components.size());
        for (const ColoredGraph& c : dec.components) canon.push_back(canonical_form(c));
        std::map<std::string, TypeBlock> types;
        for (size_t i = 0; i < dec.components.size(); ++i) {
            TypeBlock& tb = types[canon[i].key];
            if (tb.comp_ids.empty()) {
                tb.key = canon[i].key;
                tb.elements = connected_elements(canon[i].graph);
                tb.size = dec.components[i].half_order;
            }
            tb.comp_ids.push_back(static_cast<int>(i));
        }
        // Assemble all wreath elements: per type, a permutation of the copies
        // and an automorphism of each copy.
        std::vector<Perm> all{Perm(g.half_order, -1)};
        for (auto& [key, tb] : types) {
            const int m = static_cast<int>(tb.comp_ids.size());
            std::vector<Perm> copy_perms;
            for_each_perm(m, [&](const Perm& pi) { copy_perms.push_back(pi); });
            std::vector<Perm> extended;
            for (const Perm& base : all) {
                // Choose per-copy automorphisms by odometer.
                std::vector<size_t> pick(m, 0);
                for (const Perm& pi : copy_perms) {
                    std::fill(pick.begin(), pick.end(), 0);
                    while (true) {
                        Perm tau = base;
                        for (int j = 0; j < m; ++j) {
                            int src = tb.comp_ids[j];
                            int dst = tb.comp_ids[pi[j]];
                            const Perm& a = tb.elements[pick[j]];
                            const Perm& alpha_src = canon[src].white_relabel;
                            Perm alpha_dst_inv = inverse_perm(canon[dst].white_relabel);
                            for (size_t local = 0; local < dec.whites[src].size(); ++local) {
                                int w = dec.whites[src][local];
                                int canon_idx = alpha_src[static_cast<int>(local)];
                                tau[w] = dec.whites[dst][alpha_dst_inv[a[canon_idx]]];
                            }
                        }
                        extended.push_back(std::move(tau));
                        int k = 0;
                        while (k < m && ++pick[k] == tb.elements.size()) pick[k++] = 0;
                        if (k == m) break;
                    }
                }
            }
            all = std::move(extended);
        }
        out.elements = std::move(all);
    }
    out.order = static_cast<long long>(out.elements.size());
    std::sort(out.elements.begin(), out.elements.end());

    // Greedy generating set: add elements not yet generated, closing each time.
    std::set<Perm> generated{identity_perm(g.half_order)};
    for (const Perm& e : out.elements) {
        if (generated.count(e)) continue;
        out.generators.push_back(e);
        std::vector<Perm> frontier(generated.begin(), generated.end());
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& a : frontier)
                for (const Perm& gen : out.generators) {
                    Perm prod = compose_perm(gen, a);
                    if (generated.insert(prod).second) next.push_back(std::move(prod));
                }
            frontier = std::move(next);
        }
    }
    return out;
}

long long aut_order(const ColoredGraph& g) {
    require_valid(g);
    if (g.half_order == 0) return 1;
    Decomposition dec = decompose(g);
    if (dec.components.size() == 1)
        return static_cast<long long>(connected_elements(g).size());
    std::map<std::string, std::pair<long long, int>> types; // key -> (|Aut|, multiplicity)
    for (const ColoredGraph& c : dec.components) {
        CanonicalResult cf = canonical_form(c);
        auto it = types.find(cf.key);
        if (it == types.end())
            types[cf.key] = {static_cast<long long>(connected_elements(cf.graph).size()), 1};
        else
            ++it->second.second;
    }
    long long order = 1;
    for (const auto& [key, v] : types) {
        const auto& [aut, m] = v;
        order *= factorial_ll(m);
        for (int i = 0; i < m; ++i) order *= aut;
    }
    return order;
}

long long symmetry_factor(const ColoredGraph& b) { return aut_order(b); }

long long symmetry_factor(const DisconnectedGraph& b) { return aut_order(flatten(b)); }

long long cycle_type_symmetry_factor(const std::vector<int>& cycle_js) {
    DisconnectedGraph d;
    d.rank = 2;
    for (int j : cycle_js) {
        if (j < 1) throw std::invalid_argument("cycle length parameter must be positive");
        d.components.push_back(ColoredGraph{2, j, {identity_perm(j), cyclic_perm(j)}});
    }
    return symmetry_factor(d);
}

}  // namespace ctm
