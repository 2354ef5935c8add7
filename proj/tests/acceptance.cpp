// Acceptance suite: one checkable criterion per numbered section, each printing
// a single PASS/FAIL line.  Run with --criterion N for one of them, --stretch
// to include the optional large enumeration, or no arguments for everything.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ctm/automorphisms.hpp"
#include "ctm/boundary.hpp"
#include "ctm/canonical.hpp"
#include "ctm/enumeration.hpp"
#include "ctm/graph.hpp"
#include "ctm/invariants.hpp"
#include "ctm/io.hpp"
#include "ctm/pi1.hpp"
#include "ctm/realization.hpp"
#include "ctm/surgery.hpp"
#include "ctm/wti.hpp"

using namespace ctm;

namespace {

bool g_stretch = false;

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

long long connected_count(int rank, int p) {
    EnumerationRequest req;
    req.rank = rank;
    req.half_order = p;
    req.count_only = true;
    return enumerate_graphs(req).count;
}

Outcome criterion_1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const long long expect[] = {1, 3, 7, 26, 97};
    for (int p = 1; p <= 5; ++p) {
        long long n = connected_count(3, p);
        o.expect(n == expect[p - 1], "rank 3 p=" + std::to_string(p) + " gave " +
                                         std::to_string(n) + ", wanted " +
                                         std::to_string(expect[p - 1]));
    }
    if (g_stretch) {
        long long n = connected_count(3, 6);
        o.expect(n == 624, "rank 3 p=6 gave " + std::to_string(n) + ", wanted 624");
        if (o.pass) o.detail = "including p=6 -> 624";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 300.0, "enumeration exceeded 5 minutes");
    return o;
}

Outcome criterion_2() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const long long expect[] = {1, 7, 41, 604};
    for (int p = 1; p <= 4; ++p) {
        long long n = connected_count(4, p);
        o.expect(n == expect[p - 1], "rank 4 p=" + std::to_string(p) + " gave " +
                                         std::to_string(n) + ", wanted " +
                                         std::to_string(expect[p - 1]));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 300.0, "enumeration exceeded 5 minutes");
    return o;
}

Outcome criterion_3() {
    Outcome o;
    struct Case {
        int rank, p;
        long long expect;
    };
    for (const Case& c : {Case{3, 2, 4}, Case{3, 3, 8}, Case{4, 2, 8}}) {
        long long n = count_correlation_functions(c.rank, c.p);
        o.expect(n == c.expect, "rank " + std::to_string(c.rank) + " p=" + std::to_string(c.p) +
                                    " gave " + std::to_string(n) + ", wanted " +
                                    std::to_string(c.expect));
    }
    return o;
}

Outcome criterion_4() {
    Outcome o;
    long long checked = 0;
    auto sweep = [&](int rank, int pmax) {
        for (int p = 1; p <= pmax; ++p)
            for (const ColoredGraph& g : all_classes(rank, p)) {
                DegreeReport r = degree_report(g); // throws on any mismatch
                o.expect(r.face_formula_consistent, "inconsistent degree at " + encode(g));
                ++checked;
            }
    };
    sweep(3, 4);
    sweep(4, 3);
    o.detail = std::to_string(checked) + " graphs checked";
    return o;
}

Outcome criterion_5() {
    Outcome o;
    o.expect(gurau_degree(necklace()) == 1, "necklace degree");
    std::multiset<long long> genera;
    for (const JacketReport& j : jackets(necklace())) genera.insert(j.genus);
    o.expect(genera == std::multiset<long long>{0, 0, 1}, "necklace jacket genera");
    for (int rank : {3, 4, 5})
        o.expect(gurau_degree(dipole(rank)) == 0,
                 "dipole rank " + std::to_string(rank) + " degree");
    o.expect(jackets(colored_k33()).at(0).genus == 1, "K33 genus");
    return o;
}

Outcome criterion_6() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    // Exhaustive over all class pairs with p <= 3 and all same-color edge pairs.
    std::vector<ColoredGraph> pool;
    for (int p = 1; p <= 3; ++p)
        for (const ColoredGraph& g : all_classes(3, p)) pool.push_back(g);
    std::map<std::string, long long> degree_of;
    for (const ColoredGraph& g : pool) degree_of[encode(g)] = gurau_degree(g);
    long long checked = 0;
    for (const ColoredGraph& a : pool)
        for (const ColoredGraph& b : pool) {
            long long want = degree_of[encode(a)] + degree_of[encode(b)];
            for (int c = 1; c <= 3; ++c)
                for (int wa = 0; wa < a.half_order; ++wa)
                    for (int wb = 0; wb < b.half_order; ++wb) {
                        ++checked;
                        if (gurau_degree(connected_sum(a, {c, wa}, b, {c, wb})) != want)
                            o.expect(false, "additivity broke at " + encode(a) + " # " + encode(b));
                    }
        }
    // Randomized larger instances, both ranks.
    std::mt19937_64 rng(2026);
    auto random_graph = [&](int rank, int p) {
        std::vector<Perm> perms;
        for (int c = 0; c < rank; ++c) {
            Perm q = identity_perm(p);
            std::shuffle(q.begin(), q.end(), rng);
            perms.push_back(std::move(q));
        }
        return ColoredGraph{rank, p, std::move(perms)};
    };
    for (int trial = 0; trial < 220; ++trial) {
        int rank = trial % 2 ? 3 : 4;
        ColoredGraph a = random_graph(rank, 4 + static_cast<int>(rng() % 3));
        ColoredGraph b = random_graph(rank, 4 + static_cast<int>(rng() % 3));
        int c = 1 + static_cast<int>(rng() % rank);
        EdgeRef e{c, static_cast<int>(rng() % a.half_order)};
        EdgeRef f{c, static_cast<int>(rng() % b.half_order)};
        ++checked;
        if (gurau_degree(connected_sum(a, e, b, f)) != gurau_degree(a) + gurau_degree(b))
            o.expect(false, "additivity broke on a random pair");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 120.0, "additivity sweep exceeded 2 minutes");
    o.detail = std::to_string(checked) + " sums in " + std::to_string(secs) + "s";
    return o;
}

Outcome criterion_7() {
    Outcome o;
    o.expect(aut_order(dipole(3)) == 1, "dipole order");
    for (int k = 1; k <= 3; ++k)
        o.expect(aut_order(melonic_quartic(3, k)) == 2, "V_" + std::to_string(k) + " order");
    o.expect(aut_order(colored_k33()) == 3, "K33 order");
    // Wreath formula against exhaustive search for every disconnected class
    // with total p <= 4.
    for (int p = 2; p <= 4; ++p)
        for (const ColoredGraph& g : all_classes(3, p)) {
            if (component_partition(g).count < 2) continue;
            long long brute = 0;
            for_each_perm(g.half_order, [&](const Perm& tau) {
                if (lift(g, tau)) ++brute;
            });
            o.expect(aut_order(g) == brute, "wreath formula broke at " + encode(g));
        }
    // Rank-2 cycle types with at most 10 sources.
    std::function<void(int, int, std::vector<int>&)> sweep = [&](int remaining, int min_j,
                                                                 std::vector<int>& type) {
        if (!type.empty()) {
            long long expect = 1;
            int run = 1;
            for (size_t i = 1; i <= type.size(); ++i) {
                if (i < type.size() && type[i] == type[i - 1]) {
                    ++run;
                    continue;
                }
                expect *= factorial_ll(run);
                for (int r = 0; r < run; ++r) expect *= type[i - 1];
                run = 1;
            }
            if (cycle_type_symmetry_factor(type) != expect)
                o.expect(false, "cycle-type factor broke");
        }
        for (int j = min_j; j <= remaining; ++j) {
            type.push_back(j);
            sweep(remaining - j, j, type);
            type.pop_back();
        }
    };
    std::vector<int> type;
    sweep(10, 1, type);
    return o;
}

Outcome criterion_8() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    InteractionModel m3 = InteractionModel::phi4_melonic(3);
    InteractionModel m4 = InteractionModel::phi4_melonic(4);
    long long realized = 0;
    auto check = [&](const ColoredGraph& b, const InteractionModel& m) {
        Realization r = realize(b);
        ++realized;
        o.expect(is_feynman_graph(r.graph, m), "not a model graph for " + encode(b));
        o.expect(isomorphic(boundary(r.graph).graph, b), "boundary mismatch for " + encode(b));
    };
    int connected3 = 0;
    for (int p = 1; p <= 3; ++p) {
        EnumerationRequest req;
        req.rank = 3;
        req.half_order = p;
        for (const ColoredGraph& g : enumerate_graphs(req).graphs) {
            check(g, m3);
            ++connected3;
        }
    }
    o.expect(connected3 == 11, "expected 11 connected rank-3 boundaries");
    int connected4 = 0;
    for (int p = 1; p <= 2; ++p) {
        EnumerationRequest req;
        req.rank = 4;
        req.half_order = p;
        for (const ColoredGraph& g : enumerate_graphs(req).graphs) {
            check(g, m4);
            ++connected4;
        }
    }
    o.expect(connected4 == 8, "expected 8 connected rank-4 boundaries");
    // Disconnected targets through pretzel chaining.
    std::vector<ColoredGraph> multi = {
        flatten(DisconnectedGraph{3, {dipole(3), dipole(3)}}),
        flatten(DisconnectedGraph{3, {dipole(3), melonic_quartic(3, 1)}}),
        flatten(DisconnectedGraph{3, {dipole(3), melonic_quartic(3, 2)}}),
        flatten(DisconnectedGraph{3, {melonic_quartic(3, 3), colored_k33()}}),
        flatten(DisconnectedGraph{3, {colored_k33(), colored_k33()}}),
        flatten(DisconnectedGraph{3, {dipole(3), dipole(3), dipole(3)}}),
        flatten(DisconnectedGraph{3, {dipole(3), dipole(3), colored_k33()}}),
        flatten(DisconnectedGraph{3, {melonic_quartic(3, 1), melonic_quartic(3, 2),
                                      melonic_quartic(3, 3)}}),
        flatten(DisconnectedGraph{4, {dipole(4), necklace()}}),
        flatten(DisconnectedGraph{4, {necklace(), necklace(), dipole(4)}}),
    };
    for (const ColoredGraph& b : multi) check(b, b.rank == 3 ? m3 : m4);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 60.0, "realization sweep exceeded 1 minute");
    o.detail = std::to_string(realized) + " boundaries realized in " + std::to_string(secs) + "s";
    return o;
}

bool same_cycle_word(std::vector<int> w, const std::vector<int>& target) {
    auto rot = [&](const std::vector<int>& v) {
        if (v.size() != target.size()) return false;
        std::vector<int> d(v);
        d.insert(d.end(), v.begin(), v.end());
        for (size_t s = 0; s < v.size(); ++s)
            if (std::equal(target.begin(), target.end(), d.begin() + s)) return true;
        return false;
    };
    if (rot(w)) return true;
    std::reverse(w.begin(), w.end());
    for (int& l : w) l = -l;
    return rot(w);
}

Outcome criterion_9() {
    Outcome o;
    // Word shapes at the incidence-sequence level.
    auto lens_words = gagliardi_words(crystallization_lens31(), 3, 4);
    bool lens_word = false;
    for (const auto& w : lens_words)
        if (same_cycle_word(w, {1, -2, 1, -2, 1, -2})) lens_word = true;
    o.expect(lens_word, "(x1 x2^-1)^3 word not found on the lens fixture");
    bool trivial_word = false;
    for (const auto& w : gagliardi_words(crystallization_s2xs1(), 1, 2))
        if (same_cycle_word(w, {2, -2, 1, -1})) trivial_word = true;
    o.expect(trivial_word, "freely trivial word not found on the S2xS1 fixture");

    const AbelianInvariants trivial{0, {}}, z{1, {}}, z3{0, {3}};
    struct Fixture {
        ColoredGraph g;
        AbelianInvariants expect;
        const char* name;
    };
    std::vector<Fixture> fixtures = {{crystallization_s3(), trivial, "S3"},
                                     {crystallization_lens31(), z3, "L(3,1)"},
                                     {crystallization_s2xs1(), z, "S2xS1"}};
    for (const Fixture& f : fixtures) {
        o.expect(is_crystallization(f.g), std::string(f.name) + " not a crystallization");
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                if (i == j) continue;
                GroupPresentation base = gagliardi_presentation(f.g, i, j);
                int m = static_cast<int>(gagliardi_words(f.g, i, j).size());
                for (int dg = 0; dg < base.generators; ++dg)
                    for (int dr = 0; dr < m; ++dr) {
                        GagliardiOptions opt;
                        opt.drop_generator = dg;
                        opt.drop_relation = dr;
                        AbelianInvariants inv =
                            abelianization(gagliardi_presentation(f.g, i, j, opt));
                        if (!(inv == f.expect))
                            o.expect(false, std::string(f.name) + " wrong group at i=" +
                                                std::to_string(i) + " j=" + std::to_string(j));
                    }
            }
    }
    return o;
}

Outcome criterion_10() {
    Outcome o;
    InteractionModel m = InteractionModel::phi4_melonic(3);
    std::vector<YTerm> order2 = y_expansion(m, 1, 2);
    o.expect(order2.size() == 1, "order-2 term count");
    o.expect(order2[0].coefficient == Rational(1), "order-2 coefficient");
    o.expect(order2[0].core.residual.empty(), "order-2 residual");

    std::vector<YTerm> order4 = y_expansion(m, 1, 4);
    int quartic = 0;
    for (const YTerm& t : order4)
        if (t.boundary.half_order == 2) {
            ++quartic;
            o.expect(t.coefficient == Rational(1, 2), "order-4 coefficient");
            o.expect(isomorphic(t.core.residual, dipole(3)), "order-4 residual");
        }
    o.expect(quartic == 8, "order-4 term count gave " + std::to_string(quartic));

    DeltaBookkeeping d = delta_bookkeeping(dipole(3), 0, 2);
    o.expect(d.summed_colors == std::vector<int>{1, 3}, "dipole summed colors");
    o.expect(d.z.size() == 3 && d.z[0].kind == ZEntry::Kind::Summed &&
                 d.z[1].kind == ZEntry::Kind::Fixed && d.z[2].kind == ZEntry::Kind::Summed,
             "dipole substitution pattern");
    o.expect(d.residual.empty(), "dipole residual");

    o.expect(sde_two_point_terms(3).category_counts() == std::array<int, 6>{1, 3, 3, 3, 3, 3},
             "SDE category counts");
    return o;
}

Outcome criterion_11() {
    Outcome o;
    long long graphs = 0;
    auto sweep = [&](int rank, int pmax) {
        for (int p = 1; p <= pmax; ++p)
            for (const ColoredGraph& g : all_classes(rank, p)) {
                ++graphs;
                std::string doc = serialize(g);
                ColoredGraph back = parse_closed(doc);
                o.expect(serialize(back) == doc, "serialization not stable at " + encode(g));
                o.expect(canonical_key(back) == canonical_key(g),
                         "canonical form changed through serialization at " + encode(g));
            }
    };
    sweep(3, 4);
    sweep(4, 3);
    for (int p = 1; p <= 3; ++p)
        for (const ColoredGraph& g : all_classes(3, p)) {
            GraphDerivative gd = graph_derivative(g, g);
            o.expect(gd.nonzero, "derivative vanished at " + encode(g));
            o.expect(static_cast<long long>(gd.slot_permutations.size()) == aut_order(g),
                     "derivative term count wrong at " + encode(g));
        }
    o.detail = std::to_string(graphs) + " documents round-tripped";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--stretch"))
            g_stretch = true;
    }
    using Criterion = Outcome (*)();
    const Criterion criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                                  criterion_5, criterion_6, criterion_7, criterion_8,
                                  criterion_9, criterion_10, criterion_11};
    int failures = 0;
    for (int n = 1; n <= 11; ++n) {
        if (only && n != only) continue;
        Outcome o;
        try {
            o = criteria[n - 1]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d: %s%s%s\n", n, o.pass ? "PASS" : "FAIL",
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    return failures;
}
