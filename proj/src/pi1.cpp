#include "ctm/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ctm {

bool is_crystallization(const ColoredGraph& g) {
    require_valid(g);
    if (!is_connected(g)) return false;
    for (int c = 1; c <= g.rank; ++c) {
        std::vector<int> rest;
        for (int d = 1; d <= g.rank; ++d)
            if (d != c) rest.push_back(d);
        if (component_partition(g, rest).count != 1) return false;
    }
    return true;
}

namespace {

struct CycleData {
    std::vector<std::vector<int>> words; // one word per {i,j}-cycle
};

// Words of the {i,j}-bicolored cycles: each cycle is traversed from its
// smallest white vertex, alternating color i and color j edges, emitting
// x_residue^-1 at whites and x_residue^+1 at blacks.
CycleData cycle_words(const ColoredGraph& g, int i, int j) {
    std::vector<int> complement;
    for (int c = 1; c <= g.rank; ++c)
        if (c != i && c != j) complement.push_back(c);
    VertexPartition residues = component_partition(g, complement);

    CycleData out;
    std::vector<char> seen(g.half_order, 0);
    const Perm& si = g.sigma(i);
    Perm sj_inv = inverse_perm(g.sigma(j));
    for (int start = 0; start < g.half_order; ++start) {
        if (seen[start]) continue;
        std::vector<int> word;
        int w = start;
        do {
            seen[w] = 1;
            word.push_back(-(residues.white_comp[w] + 1));
            int b = si[w];
            word.push_back(residues.black_comp[b] + 1);
            w = sj_inv[b];
        } while (w != start);
        out.words.push_back(std::move(word));
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> gagliardi_words(const ColoredGraph& g, int i, int j) {
    require_valid(g);
    if (i == j || i < 1 || j < 1 || i > g.rank || j > g.rank)
        throw std::invalid_argument("need two distinct colors in range");
    return cycle_words(g, i, j).words;
}

GroupPresentation gagliardi_presentation(const ColoredGraph& g, int i, int j,
                                         const GagliardiOptions& opt) {
    require_valid(g);
    if (g.rank < 4) throw std::invalid_argument("presentation needs at least 4 colors");
    if (!is_crystallization(g)) throw std::invalid_argument("graph is not a crystallization");
    if (i == j || i < 1 || j < 1 || i > g.rank || j > g.rank)
        throw std::invalid_argument("need two distinct colors in range");

    std::vector<int> complement;
    for (int c = 1; c <= g.rank; ++c)
        if (c != i && c != j) complement.push_back(c);
    int n_gens = component_partition(g, complement).count;

    CycleData cycles = cycle_words(g, i, j);
    int m = static_cast<int>(cycles.words.size());
    int dropped_rel = opt.drop_relation < 0 ? m - 1 : opt.drop_relation;
    int dropped_gen = opt.drop_generator < 0 ? n_gens - 1 : opt.drop_generator;
    if (dropped_rel < 0 || dropped_rel >= m) throw std::invalid_argument("dropped relation out of range");
    if (dropped_gen < 0 || dropped_gen >= n_gens)
        throw std::invalid_argument("dropped generator out of range");

    GroupPresentation p;
    p.generators = n_gens;
    p.relators.push_back({dropped_gen + 1}); // kill the chosen generator
    for (int r = 0; r < m; ++r)
        if (r != dropped_rel) p.relators.push_back(cycles.words[r]);
    return p;
}

namespace {

// Smith normal form of an integer matrix (in place); returns the diagonal.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<long long> diag;
    int r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // Find a pivot of least absolute value.
        int pr = -1, pc = -1;
        long long best = 0;
        for (int r = r0; r < rows; ++r)
            for (int c = c0; c < cols; ++c)
                if (a[r][c] != 0 && (pr < 0 || std::llabs(a[r][c]) < best)) {
                    pr = r;
                    pc = c;
                    best = std::llabs(a[r][c]);
                }
        if (pr < 0) break;
        std::swap(a[r0], a[pr]);
        for (int r = 0; r < rows; ++r) std::swap(a[r][c0], a[r][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = r0 + 1; r < rows; ++r)
                if (a[r][c0] != 0) {
                    long long q = a[r][c0] / a[r0][c0];
                    for (int c = c0; c < cols; ++c) a[r][c] -= q * a[r0][c];
                    if (a[r][c0] != 0) {
                        std::swap(a[r], a[r0]);
                        clean = false;
                    }
                }
            for (int c = c0 + 1; c < cols; ++c)
                if (a[r0][c] != 0) {
                    long long q = a[r0][c] / a[r0][c0];
                    for (int r = r0; r < rows; ++r) a[r][c] -= q * a[r][c0];
                    if (a[r0][c] != 0) {
                        for (int r = r0; r < rows; ++r) std::swap(a[r][c], a[r][c0]);
                        clean = false;
                    }
                }
        }
        diag.push_back(std::llabs(a[r0][c0]));
        ++r0;
        ++c0;
    }
    // Enforce the divisibility chain d_1 | d_2 | ... by gcd/lcm swaps.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t k = 0; k + 1 < diag.size(); ++k) {
            if (diag[k + 1] % diag[k] == 0) continue;
            long long g = std::gcd(diag[k], diag[k + 1]);
            long long l = diag[k] / g * diag[k + 1];
            diag[k] = g;
            diag[k + 1] = l;
            changed = true;
        }
    }
    return diag;
}

}  // namespace

AbelianInvariants abelianization(const GroupPresentation& p) {
    std::vector<std::vector<long long>> a(p.relators.size(),
                                          std::vector<long long>(p.generators, 0));
    for (size_t r = 0; r < p.relators.size(); ++r)
        for (int letter : p.relators[r]) {
            int gidx = std::abs(letter) - 1;
            if (gidx < 0 || gidx >= p.generators)
                throw std::invalid_argument("relator letter out of range");
            a[r][gidx] += letter > 0 ? 1 : -1;
        }
    std::vector<long long> diag = smith_diagonal(std::move(a));
    AbelianInvariants inv;
    int nonzero = 0;
    for (long long d : diag)
        if (d != 0) {
            ++nonzero;
            if (d > 1) inv.torsion.push_back(d);
        }
    std::sort(inv.torsion.begin(), inv.torsion.end());
    inv.free_rank = p.generators - nonzero;
    return inv;
}

ColoredGraph crystallization_s3() { return dipole(4); }

ColoredGraph crystallization_s2xs1() {
    return ColoredGraph{4, 4,
                        {identity_perm(4), Perm{1, 0, 3, 2}, Perm{0, 3, 1, 2}, Perm{2, 1, 3, 0}}};
}

ColoredGraph crystallization_lens31() {
    return ColoredGraph{4, 6,
                        {identity_perm(6), Perm{1, 4, 5, 2, 0, 3}, Perm{2, 3, 0, 1, 5, 4},
                         Perm{3, 5, 4, 0, 2, 1}}};
}

GroupPresentation tietze_simplify(const GroupPresentation& p) {
    GroupPresentation q = p;
    auto free_reduce = [](std::vector<int>& w) {
        // Cancel adjacent inverse pairs, cyclically.
        bool changed = true;
        while (changed && !w.empty()) {
            changed = false;
            std::vector<int> out;
            for (int letter : w) {
                if (!out.empty() && out.back() == -letter) {
                    out.pop_back();
                    changed = true;
                } else {
                    out.push_back(letter);
                }
            }
            while (out.size() >= 2 && out.front() == -out.back()) {
                out.erase(out.begin());
                out.pop_back();
                changed = true;
            }
            w = std::move(out);
        }
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& w : q.relators) free_reduce(w);
        // Drop freely trivial relators.
        auto it = std::remove_if(q.relators.begin(), q.relators.end(),
                                 [](const std::vector<int>& w) { return w.empty(); });
        if (it != q.relators.end()) {
            q.relators.erase(it, q.relators.end());
            changed = true;
        }
        // Substitute a length-1 relator: that generator is trivial.
        for (size_t r = 0; r < q.relators.size(); ++r) {
            if (q.relators[r].size() != 1) continue;
            int dead = std::abs(q.relators[r][0]);
            q.relators.erase(q.relators.begin() + static_cast<long>(r));
            for (auto& w : q.relators) {
                std::vector<int> out;
                for (int letter : w)
                    if (std::abs(letter) != dead) out.push_back(letter);
                w = std::move(out);
            }
            // Renumber generators above the removed one.
            for (auto& w : q.relators)
                for (int& letter : w)
                    if (std::abs(letter) > dead) letter += letter > 0 ? -1 : 1;
            --q.generators;
            changed = true;
            break;
        }
    }
    std::sort(q.relators.begin(), q.relators.end());
    return q;
}

}  // namespace ctm
