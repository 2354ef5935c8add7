#include <doctest.h>

#include "ctm/boundary.hpp"
#include "ctm/canonical.hpp"
#include "ctm/enumeration.hpp"
#include "test_helpers.hpp"

using namespace ctm;
using namespace ctm::testing;

TEST_CASE("boundary of a cone is the graph itself") {
    for (const ColoredGraph& g : {dipole(3), colored_k33(), necklace(), melonic_quartic(4, 2)}) {
        BoundaryResult b = boundary(cone(g));
        CHECK_EQ(b.graph, g);
        CHECK_EQ(b.graph.half_order, g.half_order);
    }
    BoundaryResult e = boundary(cone(ColoredGraph{3, 0, std::vector<Perm>(3)}));
    CHECK(e.graph.empty());
}

TEST_CASE("closed graphs have empty boundary") {
    OpenFeynmanGraph v = necklace_vacuum();
    CHECK(boundary(v).graph.empty());
}

TEST_CASE("quartic bubble pairs and their boundaries") {
    ColoredGraph two = flatten(DisconnectedGraph{3, {melonic_quartic(3, 1), melonic_quartic(3, 1)}});

    SUBCASE("two cross propagators leave a quartic boundary") {
        OpenFeynmanGraph g = cone(two);
        g.prop0 = {2, -1, 0, -1};
        BoundaryResult b = boundary(g);
        REQUIRE_EQ(b.graph.half_order, 2);
        CHECK(isomorphic(b.graph, melonic_quartic(3, 1)));
    }
    SUBCASE("a third propagator reduces the boundary to a dipole") {
        OpenFeynmanGraph g = cone(two);
        g.prop0 = {2, 3, 0, -1};
        BoundaryResult b = boundary(g);
        REQUIRE_EQ(b.graph.half_order, 1);
        CHECK(isomorphic(b.graph, dipole(3)));
        CHECK_EQ(b.white_leg, std::vector<int>{3});
        CHECK_EQ(b.black_leg, std::vector<int>{1});
    }
}

TEST_CASE("boundary is invariant under internal relabeling") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        ColoredGraph base = random_graph(3, 4, rng);
        OpenFeynmanGraph g = cone(base);
        // Random partial matching of whites 0,1 to random blacks.
        Perm target = random_perm(4, rng);
        g.prop0 = {target[0], target[1], -1, -1};

        Perm alpha = random_perm(4, rng), beta = random_perm(4, rng);
        OpenFeynmanGraph h;
        h.rank = 3;
        h.half_order = 4;
        h.perms.assign(3, Perm(4));
        h.prop0.assign(4, -1);
        for (int c = 0; c < 3; ++c)
            for (int w = 0; w < 4; ++w) h.perms[c][alpha[w]] = beta[g.perms[c][w]];
        for (int w = 0; w < 4; ++w)
            if (g.prop0[w] >= 0) h.prop0[alpha[w]] = beta[g.prop0[w]];
        CHECK(isomorphic(boundary(g).graph, boundary(h).graph));
    }
}

TEST_CASE("boundary half_order equals the leg pair count") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        ColoredGraph base = random_graph(3, 5, rng);
        OpenFeynmanGraph g = cone(base);
        Perm target = random_perm(5, rng);
        int matched = static_cast<int>(rng() % 5);
        for (int w = 0; w < matched; ++w) g.prop0[w] = target[w];
        BoundaryResult b = boundary(g);
        CHECK_EQ(b.graph.half_order, g.leg_pairs());
        CHECK(validate(b.graph).ok);
    }
}

TEST_CASE("amputate keeps the internal structure") {
    OpenFeynmanGraph g = cone(colored_k33());
    g.prop0[0] = 2;
    CHECK_EQ(amputate(g), g);
    CHECK_EQ(amputate(necklace_vacuum()), necklace_vacuum());
}

TEST_CASE("cone then boundary is the identity on enumerated graphs") {
    // Exhaustive: every class (connected or not) for rank 3 up to p = 5 and
    // rank 4 up to p = 3.
    for (int p = 1; p <= 5; ++p)
        for (const ColoredGraph& g : all_classes(3, p)) CHECK_EQ(boundary(cone(g)).graph, g);
    for (int p = 1; p <= 3; ++p)
        for (const ColoredGraph& g : all_classes(4, p)) CHECK_EQ(boundary(cone(g)).graph, g);
}
