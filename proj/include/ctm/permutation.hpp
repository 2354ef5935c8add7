#ifndef CTM_PERMUTATION_HPP
#define CTM_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace ctm {

// A permutation of {0..n-1}, stored as its image list.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_permutation_vec(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline Perm inverse_perm(const Perm& p) {
    Perm q(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
    return q;
}

// (a o b)(i) = a[b[i]]
inline Perm compose_perm(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (int i = 0; i < static_cast<int>(b.size()); ++i) c[i] = a[b[i]];
    return c;
}

inline int cycle_count(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    int cycles = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
    }
    return cycles;
}

// Builds the transposition (a b) on {0..n-1}.
inline Perm transposition(int n, int a, int b) {
    Perm p = identity_perm(n);
    std::swap(p[a], p[b]);
    return p;
}

// Builds the n-cycle (0 1 2 ... n-1), i.e. i -> i+1 mod n.
inline Perm cyclic_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

// Calls f on every permutation of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_perm(int n, F&& f) {
    Perm p = identity_perm(n);
    do {
        f(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace ctm

#endif  // CTM_PERMUTATION_HPP
