#include <doctest.h>

#include "ctm/boundary.hpp"
#include "ctm/canonical.hpp"
#include "ctm/graph.hpp"
#include "test_helpers.hpp"

using namespace ctm;

TEST_CASE("validate accepts the small standard graphs") {
    CHECK(validate(dipole(3)).ok);
    CHECK(validate(dipole(5)).ok);
    CHECK(validate(colored_k33()).ok);
    CHECK(validate(necklace()).ok);
    CHECK(validate(ColoredGraph{3, 0, std::vector<Perm>(3)}).ok); // empty graph
}

TEST_CASE("validate flags a non-permutation color map") {
    ColoredGraph g{3, 2, {Perm{0, 0}, identity_perm(2), identity_perm(2)}};
    ValidityReport r = validate(g);
    CHECK_FALSE(r.ok);
    REQUIRE_EQ(r.violations.size(), 1);
    CHECK(r.violations[0].find("color 1") != std::string::npos);
}

TEST_CASE("validate flags non-injective prop0 and bad rank") {
    OpenFeynmanGraph g{3, 2, {identity_perm(2), identity_perm(2), identity_perm(2)},
                       {1, 1}};
    CHECK_FALSE(validate(g).ok);
    CHECK_FALSE(validate(ColoredGraph{1, 1, {Perm{0}}}).ok);
}

TEST_CASE("open graph with empty prop0 has all legs") {
    OpenFeynmanGraph g = cone(melonic_quartic(3, 1));
    CHECK(validate(g).ok);
    CHECK_EQ(g.leg_pairs(), 2);
    CHECK_EQ(g.unmatched_blacks(), std::vector<int>{0, 1});
}

TEST_CASE("connected components over color subsets") {
    ColoredGraph two = flatten(DisconnectedGraph{3, {dipole(3), dipole(3)}});
    CHECK_EQ(component_partition(two).count, 2);

    // K_c(3,3) restricted to colors {1,2} is a single 6-cycle.
    std::vector<int> pair12{1, 2};
    CHECK_EQ(component_partition(colored_k33(), pair12).count, 1);

    // V_1 restricted to colors {2,3} falls apart into two bubbles.
    std::vector<int> pair23{2, 3};
    auto bs = bubbles(melonic_quartic(3, 1), pair23);
    CHECK_EQ(bs.size(), 2);
    CHECK_EQ(bs[0].graph.rank, 2);
    CHECK_EQ(bs[0].graph.half_order, 1);
}

TEST_CASE("decompose splits and flatten reassembles") {
    DisconnectedGraph d{3, {melonic_quartic(3, 2), dipole(3)}};
    ColoredGraph flat = flatten(d);
    CHECK_EQ(flat.half_order, 3);
    Decomposition dec = decompose(flat);
    REQUIRE_EQ(dec.components.size(), 2);
    CHECK_EQ(dec.components[0].half_order, 2);
    CHECK_EQ(dec.components[1].half_order, 1);
    CHECK_EQ(dec.whites[1], std::vector<int>{2});
}

TEST_CASE("is_feynman_graph checks residues and internal propagators") {
    InteractionModel model = InteractionModel::phi4_melonic(3);

    // The cone of a vertex has no internal color-0 edge.
    CHECK_FALSE(is_feynman_graph(cone(melonic_quartic(3, 1)), model));

    // Two V_1 bubbles fully matched make a vacuum graph.
    ColoredGraph pair = flatten(DisconnectedGraph{3, {melonic_quartic(3, 1), melonic_quartic(3, 1)}});
    OpenFeynmanGraph vac = cone(pair);
    vac.prop0 = {2, 3, 0, 1};
    CHECK(is_feynman_graph(vac, model));

    // A K_c(3,3) residue is not quartic.
    OpenFeynmanGraph k = cone(colored_k33());
    k.prop0 = {0, 1, -1};
    CHECK_FALSE(is_feynman_graph(k, model));
}

TEST_CASE("necklace_vacuum is a phi4 vacuum graph") {
    OpenFeynmanGraph v = necklace_vacuum();
    CHECK(v.is_closed());
    CHECK(is_feynman_graph(v, InteractionModel::phi4_melonic(3)));
}
