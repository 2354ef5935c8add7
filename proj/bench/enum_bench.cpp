// Benchmark: OpenMP enumeration kernel against the serial reference.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ctm/enumeration.hpp"

using namespace ctm;

namespace {

double run_ms(const EnumerationRequest& req, bool serial, long long& count) {
    auto t0 = std::chrono::steady_clock::now();
    EnumerationResult r = serial ? enumerate_serial(req) : enumerate_graphs(req);
    auto t1 = std::chrono::steady_clock::now();
    count = r.count;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    // Optional: maximal rank-3 half order (default 5; pass 6 for the big run).
    int pmax3 = argc > 1 ? std::atoi(argv[1]) : 5;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled; kernels identical)\n");
#endif
    std::printf("%-14s %12s %12s %12s %8s\n", "request", "classes", "serial-ms", "parallel-ms",
                "speedup");
    struct Case {
        int rank, p;
    };
    std::vector<Case> cases;
    for (int p = 4; p <= pmax3; ++p) cases.push_back({3, p});
    cases.push_back({4, 3});
    cases.push_back({4, 4});
    for (const Case& c : cases) {
        EnumerationRequest req;
        req.rank = c.rank;
        req.half_order = c.p;
        req.connected_only = true;
        req.count_only = true;
        long long n1 = 0, n2 = 0;
        double ser = run_ms(req, true, n1);
        double par = run_ms(req, false, n2);
        if (n1 != n2) {
            std::fprintf(stderr, "kernel mismatch: %lld vs %lld\n", n1, n2);
            return 1;
        }
        std::printf("D=%d 2p=%-8d %12lld %12.1f %12.1f %7.2fx\n", c.rank, 2 * c.p, n1, ser, par,
                    par > 0 ? ser / par : 0.0);
    }
    return 0;
}
