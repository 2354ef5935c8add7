#include "ctm/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ctm/canonical.hpp"
#include "ctm/io.hpp"

namespace ctm {

namespace {

constexpr double kMaxTuples = 6.0e7;
constexpr double kMaxWork = 4.0e9; // tuples x p^3 canonicalization estimate

double tuple_space(int rank, int half_order) {
    double f = 1;
    for (int i = 2; i <= half_order; ++i) f *= i;
    return std::pow(f, rank - 1);
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    for_each_perm(n, [&](const Perm& p) { out.push_back(p); });
    return out;
}

// Unrank a tuple index into (sigma_2..sigma_D) and test it.  The graph is kept
// iff it equals its own canonical form, which picks exactly one gauge-fixed
// tuple per isomorphism class.
struct TupleScanner {
    int rank, p;
    bool connected_only;
    std::vector<Perm> table; // S_p

    long long total() const {
        long long t = 1;
        for (int i = 0; i < rank - 1; ++i) t *= static_cast<long long>(table.size());
        return t;
    }

    // Returns the canonical representative if tuple `idx` is self-canonical.
    bool test(long long idx, ColoredGraph& out) const {
        ColoredGraph g;
        g.rank = rank;
        g.half_order = p;
        g.perms.resize(rank);
        g.perms[0] = identity_perm(p);
        for (int c = rank; c >= 2; --c) {
            g.perms[c - 1] = table[idx % table.size()];
            idx /= static_cast<long long>(table.size());
        }
        if (connected_only && !is_connected(g)) return false;
        CanonicalResult cf = canonical_form(g);
        if (cf.graph != g) return false;
        out = std::move(cf.graph);
        return true;
    }
};

void check_request(const EnumerationRequest& req) {
    if (req.rank < 2) throw std::invalid_argument("rank must be at least 2");
    if (req.half_order < 1) throw std::invalid_argument("half_order must be positive");
    if (!enumeration_feasible(req.rank, req.half_order))
        throw std::invalid_argument(
            "enumeration request beyond the desk-scale limit: (p!)^(D-1) = " +
            std::to_string(tuple_space(req.rank, req.half_order)) + " tuples against a budget of " +
            std::to_string(static_cast<long long>(kMaxTuples)) + " tuples / " +
            std::to_string(static_cast<long long>(kMaxWork)) + " tuple-ops");
}

void sort_results(EnumerationResult& r) {
    std::sort(r.graphs.begin(), r.graphs.end(),
              [](const ColoredGraph& a, const ColoredGraph& b) { return encode(a) < encode(b); });
}

}  // namespace

bool enumeration_feasible(int rank, int half_order) {
    double tuples = tuple_space(rank, half_order);
    double work = tuples * half_order * half_order * half_order;
    return tuples <= kMaxTuples && work <= kMaxWork;
}

EnumerationResult enumerate_serial(const EnumerationRequest& req) {
    check_request(req);
    TupleScanner scan{req.rank, req.half_order, req.connected_only, all_perms(req.half_order)};
    EnumerationResult out;
    ColoredGraph g;
    const long long total = scan.total();
    for (long long idx = 0; idx < total; ++idx) {
        if (!scan.test(idx, g)) continue;
        ++out.count;
        if (!req.count_only) out.graphs.push_back(g);
    }
    sort_results(out);
    return out;
}

long long enumerate_stream(const EnumerationRequest& req,
                           const std::function<void(const ColoredGraph&)>& sink) {
    check_request(req);
    TupleScanner scan{req.rank, req.half_order, req.connected_only, all_perms(req.half_order)};
    ColoredGraph g;
    long long count = 0;
    const long long total = scan.total();
    for (long long idx = 0; idx < total; ++idx) {
        if (!scan.test(idx, g)) continue;
        ++count;
        sink(g);
    }
    return count;
}

EnumerationResult enumerate_graphs(const EnumerationRequest& req) {
    check_request(req);
    TupleScanner scan{req.rank, req.half_order, req.connected_only, all_perms(req.half_order)};
    const long long total = scan.total();
    EnumerationResult out;
#ifdef _OPENMP
    int threads = req.jobs > 0 ? req.jobs : omp_get_max_threads();
    std::vector<EnumerationResult> local(threads);
#pragma omp parallel num_threads(threads)
    {
        int t = omp_get_thread_num();
        EnumerationResult& mine = local[t];
        ColoredGraph g;
#pragma omp for schedule(dynamic, 1024)
        for (long long idx = 0; idx < total; ++idx) {
            if (!scan.test(idx, g)) continue;
            ++mine.count;
            if (!req.count_only) mine.graphs.push_back(g);
        }
    }
    for (EnumerationResult& part : local) {
        out.count += part.count;
        out.graphs.insert(out.graphs.end(), std::make_move_iterator(part.graphs.begin()),
                          std::make_move_iterator(part.graphs.end()));
    }
    sort_results(out);
#else
    (void)total;
    out = enumerate_serial(req);
#endif
    return out;
}

long long count_correlation_functions(int rank, int half_order) {
    // Euler transform of the connected counts c_k, via b_n = sum_{d|n} d c_d
    // and n a_n = b_n + sum_{k<n} b_k a_{n-k}.
    std::vector<long long> c(half_order + 1, 0);
    for (int k = 1; k <= half_order; ++k) {
        EnumerationRequest req;
        req.rank = rank;
        req.half_order = k;
        req.connected_only = true;
        req.count_only = true;
        c[k] = enumerate_graphs(req).count;
    }
    std::vector<long long> b(half_order + 1, 0), a(half_order + 1, 0);
    for (int n = 1; n <= half_order; ++n)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) b[n] += d * c[d];
    for (int n = 1; n <= half_order; ++n) {
        long long acc = b[n];
        for (int k = 1; k < n; ++k) acc += b[k] * a[n - k];
        if (acc % n != 0) throw std::logic_error("Euler transform accumulator not divisible");
        a[n] = acc / n;
    }
    return a[half_order];
}

std::vector<ColoredGraph> all_classes(int rank, int half_order) {
    std::vector<std::vector<ColoredGraph>> connected(half_order + 1);
    for (int k = 1; k <= half_order; ++k) {
        EnumerationRequest req;
        req.rank = rank;
        req.half_order = k;
        connected[k] = enumerate_graphs(req).graphs;
    }
    // Multisets of connected classes with sizes summing to half_order,
    // enumerated with non-decreasing (size, index) to avoid duplicates.
    std::vector<ColoredGraph> out;
    DisconnectedGraph cur;
    cur.rank = rank;
    std::function<void(int, int, int)> rec = [&](int remaining, int min_size, int min_idx) {
        if (remaining == 0) {
            out.push_back(canonical_form(flatten(cur)).graph);
            return;
        }
        for (int size = min_size; size <= remaining; ++size) {
            int start = size == min_size ? min_idx : 0;
            for (int idx = start; idx < static_cast<int>(connected[size].size()); ++idx) {
                cur.components.push_back(connected[size][idx]);
                rec(remaining - size, size, idx);
                cur.components.pop_back();
            }
        }
    };
    rec(half_order, 1, 0);
    std::sort(out.begin(), out.end(),
              [](const ColoredGraph& a, const ColoredGraph& b) { return encode(a) < encode(b); });
    return out;
}

EnumerationResult enumerate_cached(const EnumerationRequest& req, const std::string& dir) {
    if (dir.empty()) return enumerate_graphs(req);
    namespace fs = std::filesystem;
    fs::path file = fs::path(dir) / ("enum_d" + std::to_string(req.rank) + "_p" +
                                     std::to_string(req.half_order) +
                                     (req.connected_only ? "_conn" : "_all") + ".json");
    if (fs::exists(file)) {
        std::ifstream in(file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        EnumerationResult out;
        out.graphs = parse_graph_list(text);
        out.count = static_cast<long long>(out.graphs.size());
        return out;
    }
    EnumerationRequest full = req;
    full.count_only = false;
    EnumerationResult out = enumerate_graphs(full);
    fs::create_directories(file.parent_path());
    std::ofstream os(file);
    os << serialize_graph_list(out.graphs) << "\n";
    return out;
}

}  // namespace ctm
