#include "wagon/recognition.hpp"

#include "wagon/exact.hpp"

#include <bit>

namespace wagon {

std::vector<PatternId> forbidden_patterns(GraphClass c)
{
    switch (c) {
    case GraphClass::P3P2Free: return {PatternKind::P3uP2};
    case GraphClass::P4P2Free: return {PatternKind::P4uP2};
    case GraphClass::TwoK2Free: return {PatternKind::TwoK2};
    case GraphClass::P3P2DiamondFree: return {PatternKind::P3uP2, PatternKind::Diamond};
    case GraphClass::TwoK2DiamondFree: return {PatternKind::TwoK2, PatternKind::Diamond};
    }
    return {};
}

std::string class_name(GraphClass c)
{
    switch (c) {
    case GraphClass::P3P2Free: return "p3p2";
    case GraphClass::P4P2Free: return "p4p2";
    case GraphClass::TwoK2Free: return "2k2";
    case GraphClass::P3P2DiamondFree: return "p3p2diamond";
    case GraphClass::TwoK2DiamondFree: return "2k2diamond";
    }
    return "?";
}

std::optional<GraphClass> parse_class(const std::string& name)
{
    for (GraphClass c : {GraphClass::P3P2Free, GraphClass::P4P2Free, GraphClass::TwoK2Free,
             GraphClass::P3P2DiamondFree, GraphClass::TwoK2DiamondFree})
        if (class_name(c) == name)
            return c;
    return std::nullopt;
}

bool implies_p3p2_free(GraphClass c)
{
    return c != GraphClass::P4P2Free;
}

bool forbids_diamond(GraphClass c)
{
    return c == GraphClass::P3P2DiamondFree || c == GraphClass::TwoK2DiamondFree;
}

ClassMembershipReport check_class(const Graph& g, GraphClass c)
{
    for (const PatternId& p : forbidden_patterns(c))
        if (auto w = find_induced(g, p))
            return {c, false, std::move(w)};
    return {c, true, std::nullopt};
}

void require_class(const Graph& g, GraphClass c, const std::string& caller)
{
    auto report = check_class(g, c);
    if (!report.member)
        throw class_error(caller + ": input is not " + class_name(c) + "-free (induced "
                + describe(g, *report.witness) + ")",
            std::move(*report.witness));
}

namespace {

std::optional<Witness> find_odd_hole(const Graph& g, bool in_complement)
{
    const Graph host = in_complement ? complement(g) : g;
    for (int k = 5; k <= host.vertex_count(); k += 2) {
        PatternId p = in_complement ? PatternId::antihole(k) : PatternId::hole(k);
        // search runs on the side where the cycle is a plain hole
        if (auto w = find_induced(host, PatternId::hole(k))) {
            w->pattern = p;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

PerfectnessReport is_perfect_small(const Graph& g, PerfectnessMode mode)
{
    int n = g.vertex_count();
    if (mode == PerfectnessMode::SubgraphSweep) {
        if (n > kSubgraphSweepLimit)
            throw capability_error("is_perfect_small(subgraph_sweep) supports at most "
                + std::to_string(kSubgraphSweepLimit) + " vertices (got " + std::to_string(n)
                + ")");
        // graphs on fewer than 5 vertices always satisfy chi == omega
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) < 5)
                continue;
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v))
                    s.push_back(v);
            Graph h = induced_subgraph(g, s);
            if (chromatic_number_exact(h).chi != clique_number(h))
                return {false, std::nullopt};
        }
        return {true, std::nullopt};
    }

    if (n > kHoleSearchLimit)
        throw capability_error("is_perfect_small(hole_search) supports at most "
            + std::to_string(kHoleSearchLimit) + " vertices (got " + std::to_string(n) + ")");
    if (auto w = find_odd_hole(g, false))
        return {false, std::move(w)};
    if (auto w = find_odd_hole(g, true))
        return {false, std::move(w)};
    return {true, std::nullopt};
}

} // namespace wagon
