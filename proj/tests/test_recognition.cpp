#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wagon/fixtures.hpp"
#include "wagon/harness.hpp"
#include "wagon/recognition.hpp"

using namespace wagon;
using namespace wagon::testing;

namespace {

const std::vector<PatternId> kSmallPatterns = {
    PatternKind::P2,
    PatternKind::P3,
    PatternKind::P4,
    PatternKind::TwoK2,
    PatternKind::P3uP2,
    PatternKind::P4uP2,
    PatternKind::Diamond,
    PatternKind::C5,
    PatternId::hole(5),
    PatternId::hole(6),
    PatternId::antihole(5),
    PatternId::antihole(6),
};

} // namespace

TEST_CASE("find_induced on documented instances")
{
    Graph c5 = cycle_graph(5);
    CHECK(!find_induced(c5, PatternKind::TwoK2));
    CHECK(!naive_contains_induced(c5, PatternKind::TwoK2));

    // the diamond itself: witness is the whole graph, degree-3 pair first
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto w = find_induced(diamond, PatternKind::Diamond);
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(witness_valid(diamond, *w));

    CHECK(!find_induced(fixture("mycielski_grotzsch"), PatternKind::P3uP2));

    // lexicographically least witnesses
    Graph p3 = path_graph(3);
    CHECK(find_induced(p3, PatternKind::P2)->vertices == std::vector<int>{0, 1});
    CHECK(find_induced(p3, PatternKind::P3)->vertices == std::vector<int>{0, 1, 2});
    CHECK(find_induced(c5, PatternId::hole(5))->vertices == std::vector<int>{0, 1, 2, 3, 4});

    // requests longer than the graph are absent
    CHECK(!find_induced(c5, PatternId::hole(7)));
}

TEST_CASE("find_induced agrees with the subset-enumeration oracle")
{
    // exhaustive over all graphs on up to 5 vertices
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, [](const Graph&) { return true; }))
            for (const PatternId& p : kSmallPatterns) {
                auto found = find_induced(g, p);
                CHECK(found.has_value() == naive_contains_induced(g, p));
                if (found)
                    CHECK(witness_valid(g, *found));
            }

    // random spot checks at 6..8 vertices
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
        for (const PatternId& p : kSmallPatterns) {
            auto found = find_induced(g, p);
            CHECK(found.has_value() == naive_contains_induced(g, p));
            if (found)
                CHECK(witness_valid(g, *found));
        }
    }
}

TEST_CASE("pattern absence is hereditary")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(8, 0.5, rng);
        for (const PatternId& p : {PatternId(PatternKind::P3uP2), PatternId(PatternKind::TwoK2),
                 PatternId(PatternKind::Diamond)}) {
            if (find_induced(g, p))
                continue;
            std::vector<int> keep;
            for (int v = 0; v < 8; ++v)
                if (rng() & 1)
                    keep.push_back(v);
            CHECK(!find_induced(induced_subgraph(g, keep), p));
        }
    }
}

TEST_CASE("check_class with certificates")
{
    auto mg = fixture("mycielski_grotzsch");
    CHECK(check_class(mg, GraphClass::P3P2DiamondFree).member);

    // the forbidden pattern itself as a graph: P3 u P2 on five vertices
    Graph p3p2(5, {{0, 1}, {1, 2}, {3, 4}});
    auto rep = check_class(p3p2, GraphClass::P3P2Free);
    CHECK(!rep.member);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->vertices.size() == 5);
    CHECK(witness_valid(p3p2, *rep.witness));

    CHECK(check_class(fixture("fig5_base"), GraphClass::TwoK2DiamondFree).member);

    // forbidden-pattern order: diamond classes report the path pattern first
    Graph both(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}}); // has P3uP2 (and 2K2)
    auto pd = check_class(both, GraphClass::P3P2DiamondFree);
    REQUIRE(!pd.member);
    CHECK(pd.witness->pattern.kind == PatternKind::P3uP2);

    CHECK_THROWS_AS(require_class(both, GraphClass::P3P2Free, "test"), class_error);
}

TEST_CASE("is_perfect_small documented instances")
{
    auto c5 = cycle_graph(5);
    auto hole = is_perfect_small(c5, PerfectnessMode::HoleSearch);
    CHECK(!hole.perfect);
    REQUIRE(hole.witness.has_value());
    CHECK(hole.witness->vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(!is_perfect_small(c5, PerfectnessMode::SubgraphSweep).perfect);

    CHECK(is_perfect_small(complete_graph(4), PerfectnessMode::HoleSearch).perfect);
    CHECK(is_perfect_small(complete_graph(4), PerfectnessMode::SubgraphSweep).perfect);

    auto f5 = is_perfect_small(fixture("fig5_base"), PerfectnessMode::HoleSearch);
    CHECK(!f5.perfect);
    REQUIRE(f5.witness.has_value());
    CHECK(f5.witness->vertices == std::vector<int>{0, 1, 2, 3, 4}); // the outer cycle

    // C7 has an odd antihole in its complement's sense: the complement of C7
    // contains holes; from the hole side, C7 itself is the witness
    auto c7 = is_perfect_small(cycle_graph(7), PerfectnessMode::HoleSearch);
    CHECK(!c7.perfect);
    CHECK(c7.witness->pattern.vertex_count() == 7);
}

TEST_CASE("perfectness modes agree")
{
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, [](const Graph&) { return true; }))
            CHECK(is_perfect_small(g, PerfectnessMode::SubgraphSweep).perfect
                == is_perfect_small(g, PerfectnessMode::HoleSearch).perfect);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + static_cast<int>(rng() % 4); // up to 9
        Graph g = random_graph(n, 0.25 + 0.1 * static_cast<double>(rng() % 6), rng);
        CHECK(is_perfect_small(g, PerfectnessMode::SubgraphSweep).perfect
            == is_perfect_small(g, PerfectnessMode::HoleSearch).perfect);
    }
}

TEST_CASE("perfectness size limits")
{
    Graph big13(13);
    CHECK_THROWS_WITH_AS(is_perfect_small(big13, PerfectnessMode::SubgraphSweep),
        doctest::Contains("12"), capability_error);
    Graph big65(65);
    CHECK_THROWS_WITH_AS(is_perfect_small(big65, PerfectnessMode::HoleSearch),
        doctest::Contains("64"), capability_error);
}

TEST_CASE("class parsing")
{
    CHECK(parse_class("p3p2diamond") == GraphClass::P3P2DiamondFree);
    CHECK(parse_class("2k2") == GraphClass::TwoK2Free);
    CHECK(!parse_class("frobnicate").has_value());
    for (GraphClass c : {GraphClass::P3P2Free, GraphClass::P4P2Free, GraphClass::TwoK2Free,
             GraphClass::P3P2DiamondFree, GraphClass::TwoK2DiamondFree})
        CHECK(parse_class(class_name(c)) == c);
}
