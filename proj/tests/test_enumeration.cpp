#include <doctest.h>

#include <filesystem>
#include <set>

#include "ctm/canonical.hpp"
#include "ctm/enumeration.hpp"
#include "ctm/rational.hpp"
#include "test_helpers.hpp"

using namespace ctm;

TEST_CASE("connected counts match the known series") {
    auto count = [](int rank, int p) {
        EnumerationRequest req;
        req.rank = rank;
        req.half_order = p;
        req.count_only = true;
        return enumerate_graphs(req).count;
    };
    CHECK_EQ(count(3, 1), 1);
    CHECK_EQ(count(3, 2), 3);
    CHECK_EQ(count(3, 3), 7);
    CHECK_EQ(count(3, 4), 26);
    CHECK_EQ(count(4, 1), 1);
    CHECK_EQ(count(4, 2), 7);
    CHECK_EQ(count(4, 3), 41);
    // Rank 2: a connected 2-colored graph is a single cycle.
    for (int p = 1; p <= 6; ++p) CHECK_EQ(count(2, p), 1);
}

TEST_CASE("streams are duplicate-free, valid, canonical") {
    EnumerationRequest req;
    req.rank = 3;
    req.half_order = 3;
    req.connected_only = false;
    EnumerationResult r = enumerate_graphs(req);
    CHECK_EQ(r.count, 11);
    std::set<std::string> keys;
    for (const ColoredGraph& g : r.graphs) {
        CHECK(validate(g).ok);
        CHECK_EQ(canonical_form(g).graph, g);
        keys.insert(encode(g));
    }
    CHECK_EQ(keys.size(), r.graphs.size());

    EnumerationRequest conn = req;
    conn.connected_only = true;
    for (const ColoredGraph& g : enumerate_graphs(conn).graphs)
        CHECK(is_connected(g));
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    for (int rank : {3, 4}) {
        for (int p = 1; p <= (rank == 3 ? 4 : 3); ++p) {
            EnumerationRequest req;
            req.rank = rank;
            req.half_order = p;
            req.connected_only = (p % 2) == 0;
            EnumerationResult par = enumerate_graphs(req);
            EnumerationResult ser = enumerate_serial(req);
            CHECK_EQ(par.count, ser.count);
            REQUIRE_EQ(par.graphs.size(), ser.graphs.size());
            for (size_t i = 0; i < par.graphs.size(); ++i)
                CHECK_EQ(par.graphs[i], ser.graphs[i]);
        }
    }
}

TEST_CASE("orbit counting cross-check") {
    // Sum over classes of the gauge-fixed tuple-orbit sizes recovers (p!)^(D-1).
    // The orbit of a class under simultaneous conjugation has size p!/|Aut|.
    for (int p = 1; p <= 3; ++p) {
        EnumerationRequest req;
        req.rank = 3;
        req.half_order = p;
        req.connected_only = false;
        long long total = 0;
        for (const ColoredGraph& g : enumerate_graphs(req).graphs) {
            long long stab = 0;
            for_each_perm(p, [&](const Perm& alpha) {
                ColoredGraph conj = g;
                for (int c = 0; c < 3; ++c)
                    conj.perms[c] = compose_perm(alpha, compose_perm(g.perms[c], inverse_perm(alpha)));
                // Conjugation keeps sigma_1 = id; count the stabilizer.
                if (conj == g) ++stab;
            });
            total += factorial_ll(p) / stab;
        }
        CHECK_EQ(total, factorial_ll(p) * factorial_ll(p));
    }
}

TEST_CASE("correlation function counts via the Euler transform") {
    CHECK_EQ(count_correlation_functions(3, 1), 1);
    CHECK_EQ(count_correlation_functions(3, 2), 4);
    CHECK_EQ(count_correlation_functions(3, 3), 11);
    CHECK_EQ(count_correlation_functions(4, 2), 8);
    CHECK_EQ(count_correlation_functions(4, 3), 49);
}

TEST_CASE("all_classes assembles connected and disconnected classes") {
    std::vector<ColoredGraph> classes = all_classes(3, 2);
    CHECK_EQ(classes.size(), 4);
    int disconnected = 0;
    for (const ColoredGraph& g : classes)
        if (component_partition(g).count > 1) ++disconnected;
    CHECK_EQ(disconnected, 1);
}

TEST_CASE("streaming mode visits every class once") {
    EnumerationRequest req;
    req.rank = 3;
    req.half_order = 3;
    req.connected_only = false;
    std::set<std::string> keys;
    long long n = enumerate_stream(req, [&](const ColoredGraph& g) { keys.insert(encode(g)); });
    CHECK_EQ(n, 11);
    CHECK_EQ(keys.size(), 11);
}

TEST_CASE("infeasible requests are refused with the limit") {
    EnumerationRequest req;
    req.rank = 4;
    req.half_order = 9;
    CHECK_THROWS_WITH_AS((void)enumerate_graphs(req),
                         doctest::Contains("desk-scale limit"), std::invalid_argument);
    CHECK_FALSE(enumeration_feasible(3, 7)); // tuple budget ok, work budget not
    CHECK(enumeration_feasible(3, 6));
    CHECK(enumeration_feasible(4, 5));
    CHECK(enumeration_feasible(2, 10));
}

TEST_CASE("cache round-trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ctm_cache_test";
    fs::remove_all(dir);
    EnumerationRequest req;
    req.rank = 3;
    req.half_order = 2;
    EnumerationResult first = enumerate_cached(req, dir.string());
    CHECK(fs::exists(dir / "enum_d3_p2_conn.json"));
    EnumerationResult second = enumerate_cached(req, dir.string());
    CHECK_EQ(first.count, second.count);
    REQUIRE_EQ(first.graphs.size(), second.graphs.size());
    for (size_t i = 0; i < first.graphs.size(); ++i) CHECK_EQ(first.graphs[i], second.graphs[i]);
    fs::remove_all(dir);
}
