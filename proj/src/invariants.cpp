#include "ctm/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctm {

namespace {

// Cycles of sigma_d^-1 o sigma_c, counted per component of the graph.
std::vector<long long> pair_faces_per_component(const ColoredGraph& g,
                                                const VertexPartition& part, int c, int d) {
    std::vector<long long> counts(part.count, 0);
    Perm m = compose_perm(inverse_perm(g.sigma(d)), g.sigma(c));
    std::vector<char> seen(g.half_order, 0);
    for (int w = 0; w < g.half_order; ++w) {
        if (seen[w]) continue;
        ++counts[part.white_comp[w]];
        for (int x = w; !seen[x]; x = m[x]) seen[x] = 1;
    }
    return counts;
}

// Representatives of cyclic orders on {1..C} up to rotation and reflection.
std::vector<std::vector<int>> jacket_classes(int colors) {
    std::vector<int> rest(colors - 1);
    for (int i = 0; i < colors - 1; ++i) rest[i] = i + 2;
    std::vector<std::vector<int>> out;
    do {
        // Rotation is fixed by pinning color 1 first; reflections are deduped
        // by keeping the representative whose reversal is not smaller.
        std::vector<int> seq;
        seq.push_back(1);
        seq.insert(seq.end(), rest.begin(), rest.end());
        std::vector<int> refl;
        refl.push_back(1);
        refl.insert(refl.end(), rest.rbegin(), rest.rend());
        if (seq <= refl) out.push_back(seq);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

FaceReport faces(const ColoredGraph& g) {
    require_valid(g);
    FaceReport r;
    VertexPartition part = component_partition(g);
    for (int c = 1; c <= g.rank; ++c)
        for (int d = c + 1; d <= g.rank; ++d) {
            std::vector<long long> counts = pair_faces_per_component(g, part, c, d);
            long long n = 0;
            for (long long v : counts) n += v;
            r.per_pair[{c, d}] = static_cast<int>(n);
            r.total += n;
        }
    return r;
}

std::vector<JacketReport> jackets(const ColoredGraph& g) {
    require_valid(g);
    if (g.rank < 3) throw std::invalid_argument("jackets need at least 3 colors");
    VertexPartition part = component_partition(g);
    std::vector<long long> comp_size(part.count, 0);
    for (int w = 0; w < g.half_order; ++w) ++comp_size[part.white_comp[w]];

    std::vector<JacketReport> out;
    for (const std::vector<int>& cyc : jacket_classes(g.rank)) {
        JacketReport jr;
        jr.cycle = cyc;
        std::vector<long long> comp_faces(part.count, 0);
        for (size_t i = 0; i < cyc.size(); ++i) {
            int c = cyc[i], d = cyc[(i + 1) % cyc.size()];
            if (c > d) std::swap(c, d);
            std::vector<long long> counts = pair_faces_per_component(g, part, c, d);
            for (int k = 0; k < part.count; ++k) comp_faces[k] += counts[k];
        }
        for (int k = 0; k < part.count; ++k) {
            long long v = 2 * comp_size[k];
            long long e = static_cast<long long>(g.rank) * comp_size[k];
            long long chi = v - e + comp_faces[k];
            if ((chi & 1LL) || chi > 2)
                throw std::logic_error("jacket Euler characteristic out of range");
            long long genus = (2 - chi) / 2;
            jr.face_count += comp_faces[k];
            jr.euler_characteristic += chi;
            jr.genus += genus;
        }
        out.push_back(std::move(jr));
    }
    return out;
}

DegreeReport degree_report(const ColoredGraph& g) {
    require_valid(g);
    DegreeReport r;
    if (g.half_order == 0) {
        r.face_formula_consistent = true;
        return r;
    }
    std::vector<JacketReport> js = jackets(g);
    for (const JacketReport& j : js) {
        r.jacket_genera.push_back(j.genus);
        r.omega += j.genus;
    }

    // Face-counting cross check, per connected component.
    const int dd = g.rank - 1; // the formula's D for a (D+1)-colored graph
    VertexPartition part = component_partition(g);
    std::vector<long long> comp_faces(part.count, 0), comp_size(part.count, 0);
    for (int w = 0; w < g.half_order; ++w) ++comp_size[part.white_comp[w]];
    for (int c = 1; c <= g.rank; ++c)
        for (int d = c + 1; d <= g.rank; ++d) {
            std::vector<long long> counts = pair_faces_per_component(g, part, c, d);
            for (int k = 0; k < part.count; ++k) comp_faces[k] += counts[k];
        }
    long long omega_formula = 0;
    for (int k = 0; k < part.count; ++k) {
        r.face_total += comp_faces[k];
        // |faces| = C(D,2) p + D - 2 omega/(D-1)!  =>  solve for omega.
        long long lhs = static_cast<long long>(dd) * (dd - 1) / 2 * comp_size[k] + dd -
                        comp_faces[k];
        Rational omega_k = Rational(lhs) * Rational(factorial_ll(dd - 1), 2);
        if (!omega_k.is_integer())
            throw std::logic_error("face formula gave a non-integer degree");
        omega_formula += omega_k.num;
    }
    if (omega_formula != r.omega)
        throw std::logic_error("jacket-sum degree disagrees with face-counting formula");
    r.face_formula_consistent = true;
    return r;
}

long long gurau_degree(const ColoredGraph& g) { return degree_report(g).omega; }

bool is_melon(const ColoredGraph& g) { return gurau_degree(g) == 0; }

Rational amplitude_exponent(const ColoredGraph& g) {
    long long omega = gurau_degree(g);
    const int dd = g.rank - 1;
    return Rational(dd) - Rational(2 * omega, factorial_ll(dd - 1));
}

}  // namespace ctm
