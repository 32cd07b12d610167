#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wagon/colouring.hpp"
#include "wagon/fixtures.hpp"
#include "wagon/harness.hpp"

#include <set>

using namespace wagon;
using namespace wagon::testing;

TEST_CASE("bound table")
{
    // cubic bound at omega 2..6
    const int expected[] = {4, 10, 20, 35, 56};
    for (int w = 2; w <= 6; ++w) {
        CHECK(bound_for_class(GraphClass::P3P2Free, w).bound == expected[w - 2]);
        CHECK(bound_for_class(GraphClass::P4P2Free, w).bound == expected[w - 2]);
        CHECK(bound_for_class(GraphClass::TwoK2Free, w).bound == expected[w - 2]);
    }

    CHECK(bound_for_class(GraphClass::P3P2DiamondFree, 2).bound == 4);
    CHECK(bound_for_class(GraphClass::P3P2DiamondFree, 3).bound == 6);
    CHECK(bound_for_class(GraphClass::P3P2DiamondFree, 4).bound == 5);
    for (int w = 5; w <= 9; ++w) {
        auto spec = bound_for_class(GraphClass::P3P2DiamondFree, w);
        CHECK(spec.bound == w);
        CHECK(spec.perfect);
    }
    CHECK(!bound_for_class(GraphClass::P3P2DiamondFree, 4).perfect);

    CHECK(bound_for_class(GraphClass::TwoK2DiamondFree, 2).bound == 3);
    CHECK(bound_for_class(GraphClass::TwoK2DiamondFree, 3).bound == 3);
    CHECK(!bound_for_class(GraphClass::TwoK2DiamondFree, 3).perfect);
    for (int w = 4; w <= 9; ++w) {
        auto spec = bound_for_class(GraphClass::TwoK2DiamondFree, w);
        CHECK(spec.bound == w);
        CHECK(spec.perfect);
    }

    for (GraphClass c : {GraphClass::P3P2Free, GraphClass::P4P2Free, GraphClass::TwoK2Free,
             GraphClass::P3P2DiamondFree, GraphClass::TwoK2DiamondFree})
        CHECK(bound_for_class(c, 1).bound == 1);

    CHECK_THROWS_AS(bound_for_class(GraphClass::P3P2Free, 0), input_error);
}

TEST_CASE("colour_disjoint_cliques")
{
    Graph three_k2 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
        complete_graph(2));
    CHECK(colour_disjoint_cliques(three_k2).colours_used == 2);

    Graph mixed = disjoint_union(disjoint_union(complete_graph(4), complete_graph(2)), Graph(1));
    auto col = colour_disjoint_cliques(mixed);
    CHECK(col.colours_used == 4);
    CHECK(verify_colouring(mixed, col).proper);

    CHECK(colour_disjoint_cliques(Graph(5)).colours_used == 1);

    auto p3 = path_graph(3);
    CHECK_THROWS_AS(colour_disjoint_cliques(p3), class_error);
    try {
        colour_disjoint_cliques(p3);
    } catch (const class_error& e) {
        CHECK(e.witness.pattern.kind == PatternKind::P3);
        CHECK(witness_valid(p3, e.witness));
    }
}

TEST_CASE("colour_cograph")
{
    CHECK(colour_cograph(cycle_graph(4)).colours_used == 2);
    CHECK(colour_cograph(disjoint_union(complete_graph(3), complete_graph(3))).colours_used == 3);
    CHECK(colour_cograph(Graph(1)).colours_used == 1);

    CHECK_THROWS_AS(colour_cograph(path_graph(4)), class_error);

    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_cograph(2 + static_cast<int>(rng() % 7), rng);
        auto col = colour_cograph(g);
        CHECK(verify_colouring(g, col).proper);
        CHECK(col.colours_used == naive_chromatic(g));
    }
}

TEST_CASE("colour_p3p2 on documented instances")
{
    for (int w = 1; w <= 6; ++w)
        CHECK(colour_p3p2(complete_graph(w)).colours_used == w);

    Graph mg = fixture("mycielski_grotzsch");
    auto col = colour_p3p2(mg);
    CHECK(verify_colouring(mg, col).proper);
    CHECK(col.colours_used <= 4);

    Graph p3p2(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(colour_p3p2(p3p2), class_error);
}

TEST_CASE("colour_p3p2 sweep: proper, within bound, sandwiched by chi")
{
    std::mt19937_64 rng(808);
    int instances = 0;
    while (instances < 200) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.3 + 0.1 * static_cast<double>(rng() % 7), rng);
        if (!check_class(g, GraphClass::P3P2Free).member)
            continue;
        ++instances;
        int w = static_cast<int>(max_clique_exact(g).size());
        if (w < 1)
            continue;
        auto col = colour_p3p2(g);
        CHECK(verify_colouring(g, col).proper);
        CHECK(col.colours_used <= bound_for_class(GraphClass::P3P2Free, std::max(w, 1)).bound);
        CHECK(col.colours_used >= chromatic_number_exact(g).chi);
    }
}

TEST_CASE("colour_p3p2 palette accounting")
{
    // fresh colours spent on the C blocks stay within w(w-1)(w+4)/6
    std::mt19937_64 rng(909);
    int instances = 0;
    while (instances < 120) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 7), 0.55, rng);
        if (!check_class(g, GraphClass::P3P2Free).member)
            continue;
        ++instances;
        int w = static_cast<int>(max_clique_exact(g).size());
        auto col = colour_p3p2(g);
        std::set<int> above_omega;
        for (int c : col.assignment)
            if (c > w)
                above_omega.insert(c);
        CHECK(static_cast<int>(above_omega.size()) <= w * (w - 1) * (w + 4) / 6);
        CHECK(col.colours_used <= w + w * (w - 1) * (w + 4) / 6);
    }
}

TEST_CASE("colour_p4p2")
{
    for (int w = 1; w <= 6; ++w)
        CHECK(colour_p4p2(complete_graph(w)).colours_used == w);

    // on (P3 u P2)-free inputs the cograph colourer never spends more
    std::mt19937_64 rng(111);
    int shared = 0;
    while (shared < 80) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
        if (!check_class(g, GraphClass::P3P2Free).member)
            continue;
        ++shared;
        CHECK(colour_p4p2(g).colours_used <= colour_p3p2(g).colours_used);
    }

    // genuinely (P4 u P2)-free instances
    int instances = 0;
    while (instances < 120) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.35 + 0.1 * static_cast<double>(rng() % 6), rng);
        if (!check_class(g, GraphClass::P4P2Free).member)
            continue;
        ++instances;
        int w = static_cast<int>(max_clique_exact(g).size());
        auto col = colour_p4p2(g);
        CHECK(verify_colouring(g, col).proper);
        CHECK(col.colours_used <= bound_for_class(GraphClass::P4P2Free, std::max(w, 1)).bound);
        CHECK(col.colours_used >= chromatic_number_exact(g).chi);
    }

    Graph p4p2(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(colour_p4p2(p4p2), class_error);
}

TEST_CASE("diamond colourer: omega 2 instances")
{
    Graph mg = fixture("mycielski_grotzsch");
    auto traced = colour_p3p2_diamond(mg);
    CHECK(verify_colouring(mg, traced.colouring).proper);
    CHECK(traced.colouring.colours_used <= 4);
    CHECK(traced.case_trace.find("omega=2") == 0);
}

TEST_CASE("diamond colourer: omega 3, including the empty-C13/C23 corner")
{
    Graph f3 = fixture("fig3_w3x4");
    auto traced = colour_p3p2_diamond(f3);
    CHECK(verify_colouring(f3, traced.colouring).proper);
    CHECK(traced.colouring.colours_used <= 6);
    CHECK(chromatic_number_exact(f3).chi == 4);

    // 2K3: C13 and C23 both empty and [C12] holds a triangle, so the
    // two-colour step cannot apply; a third block colour keeps it proper
    Graph twok3 = disjoint_union(complete_graph(3), complete_graph(3));
    auto t2 = colour_p3p2_diamond(twok3);
    CHECK(verify_colouring(twok3, t2.colouring).proper);
    CHECK(t2.colouring.colours_used <= 6);
    CHECK(t2.case_trace.find("C13 and C23 empty") != std::string::npos);
}

TEST_CASE("diamond colourer: the five omega-4 branches")
{
    struct Expect {
        Graph g;
        std::string token;
        int max_colours;
    };
    std::vector<Expect> table;
    table.push_back({clique_plus(4, {{0}, {1}}, {{0, 1}}), "case 1", 5});
    table.push_back({clique_plus(4, {{0}, {1}}), "subcase 2.1", 5});
    table.push_back({clique_plus(4, {{0}}), "case 2.2.a (K1)", 5});
    table.push_back({clique_plus(4, {{0}, {0}}, {{0, 1}}), "case 2.2.a (K2/K3)", 4});
    table.push_back(
        {clique_plus(4, {{0}, {0}, {0}}, {{0, 1}, {0, 2}, {1, 2}}), "case 2.2.a (K2/K3)", 4});
    table.push_back({clique_plus(4, {{0}, {0}}), "case 2.2.b", 4});
    // K3 component next to a K1 component: the K3 takes colours {2,3,4}
    table.push_back(
        {clique_plus(4, {{0}, {0}, {0}, {0}}, {{0, 1}, {0, 2}, {1, 2}}), "case 2.2.b", 4});

    for (const auto& e : table) {
        REQUIRE(check_class(e.g, GraphClass::P3P2DiamondFree).member);
        auto traced = colour_p3p2_diamond(e.g);
        CHECK(verify_colouring(e.g, traced.colouring).proper);
        CHECK(traced.colouring.colours_used <= e.max_colours);
        CHECK(case_token(traced.case_trace) == e.token);
        CHECK(traced.colouring.colours_used >= chromatic_number_exact(e.g).chi);
    }
}

TEST_CASE("diamond colourer: literal K1 branch can spend five colours")
{
    // K4, a C23 singleton, and a triangle inside C12: the written steps give
    // [C12] colours {1,2,5} even though four colours would do
    Graph g = clique_plus(4, {{0}, {4}, {4}, {4}}, {{1, 2}, {1, 3}, {2, 3}});
    REQUIRE(check_class(g, GraphClass::P3P2DiamondFree).member);
    auto traced = colour_p3p2_diamond(g);
    CHECK(case_token(traced.case_trace) == "case 2.2.a (K1)");
    CHECK(verify_colouring(g, traced.colouring).proper);
    CHECK(traced.colouring.colours_used == 5);
    CHECK(chromatic_number_exact(g).chi == 4);
}

TEST_CASE("diamond colourer: omega-4 swap branch when only C13 is populated")
{
    // attach the pendant to clique position 2 so the C13 side fills first
    Graph g = clique_plus(4, {{1}});
    REQUIRE(check_class(g, GraphClass::P3P2DiamondFree).member);
    auto traced = colour_p3p2_diamond(g);
    CHECK(verify_colouring(g, traced.colouring).proper);
    CHECK(traced.colouring.colours_used <= 5);
    CHECK(traced.case_trace.find("swapped") != std::string::npos);
}

TEST_CASE("diamond colourer: perfect branches use exactly omega colours")
{
    Graph twok4 = disjoint_union(complete_graph(4), complete_graph(4));
    auto t4 = colour_p3p2_diamond(twok4);
    CHECK(verify_colouring(twok4, t4.colouring).proper);
    CHECK(t4.colouring.colours_used == 4);
    CHECK(t4.case_trace.find("perfect") != std::string::npos);

    Graph k5 = clique_plus(5, {{0}, {1}}, {{0, 1}});
    auto t5 = colour_p3p2_diamond(k5);
    CHECK(t5.colouring.colours_used == 5);
    CHECK(t5.case_trace.find("perfect") != std::string::npos);
}

TEST_CASE("diamond colourer rejects bad input")
{
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(colour_p3p2_diamond(diamond), class_error);
    CHECK_THROWS_AS(colour_p3p2_diamond(Graph(3)), input_error); // omega 1
}

TEST_CASE("colour_2k2_diamond")
{
    Graph c5 = cycle_graph(5);
    auto t = colour_2k2_diamond(c5);
    CHECK(verify_colouring(c5, t.colouring).proper);
    CHECK(t.colouring.colours_used == 3);

    Graph f5 = fixture("fig5_base");
    auto tf = colour_2k2_diamond(f5);
    CHECK(verify_colouring(f5, tf.colouring).proper);
    CHECK(tf.colouring.colours_used == 3);

    for (int k = 2; k <= 4; ++k) {
        Graph blown = fig5_blow_up(k);
        auto tb = colour_2k2_diamond(blown);
        CHECK(verify_colouring(blown, tb.colouring).proper);
        CHECK(tb.colouring.colours_used == 3);
        CHECK(chromatic_number_exact(blown).chi == 3);
    }

    // the third colour appears only when C12 is nonempty
    CHECK(colour_2k2_diamond(complete_graph(2)).colouring.colours_used == 2);
    CHECK(colour_2k2_diamond(path_graph(4)).colouring.colours_used == 3);

    // omega >= 3 members use exactly omega colours
    std::mt19937_64 rng(321);
    int instances = 0;
    while (instances < 120) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.5, rng);
        if (!check_class(g, GraphClass::TwoK2DiamondFree).member)
            continue;
        int w = static_cast<int>(max_clique_exact(g).size());
        if (w < 2)
            continue;
        ++instances;
        auto tr = colour_2k2_diamond(g);
        CHECK(verify_colouring(g, tr.colouring).proper);
        if (w >= 3) {
            CHECK(tr.colouring.colours_used == w);
            CHECK(chromatic_number_exact(g).chi == w);
        } else {
            CHECK(tr.colouring.colours_used <= 3);
        }
    }

    Graph twok2(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(colour_2k2_diamond(twok2), class_error);
}
