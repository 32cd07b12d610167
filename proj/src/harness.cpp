#include "wagon/harness.hpp"

#include "wagon/errors.hpp"
#include "wagon/exact.hpp"
#include "wagon/fixtures.hpp"
#include "wagon/partition.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace wagon {

std::string mode_name(SweepMode m)
{
    return m == SweepMode::EnumerateAll ? "enumerate" : "random";
}

std::string injection_name(FaultInjection f)
{
    switch (f) {
    case FaultInjection::None: return "none";
    case FaultInjection::Colouring: return "colouring";
    case FaultInjection::Partition: return "partition";
    }
    return "?";
}

std::string encode_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.vertex_count() << ';';
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first)
            out << ',';
        first = false;
        out << u << '-' << v;
    }
    return out.str();
}

std::uint64_t canonical_code(const Graph& g)
{
    int n = g.vertex_count();
    if (n > kEnumerateLimit)
        throw capability_error("canonical_code supports at most " + std::to_string(kEnumerateLimit)
            + " vertices (got " + std::to_string(n) + ")");
    if (n <= 1)
        return 0;

    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v)
        perm[v] = v;
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });

    // runs of equal degree; only relabelings inside a run can matter
    std::vector<std::pair<int, int>> groups;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && g.degree(perm[e]) == g.degree(perm[s]))
            ++e;
        groups.emplace_back(s, e);
        s = e;
    }

    auto code_of = [&]() {
        std::uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.adjacent(perm[i], perm[j]))
                    code |= std::uint64_t{1} << bit;
        return code;
    };

    std::uint64_t best = ~std::uint64_t{0};
    auto sweep = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            best = std::min(best, code_of());
            return;
        }
        auto [s, e] = groups[gi];
        std::sort(perm.begin() + s, perm.begin() + e);
        do {
            self(self, gi + 1);
        } while (std::next_permutation(perm.begin() + s, perm.begin() + e));
    };
    sweep(sweep, 0);
    return best;
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& keep)
{
    if (n > kEnumerateLimit)
        throw capability_error("enumerate_graphs supports at most "
            + std::to_string(kEnumerateLimit) + " vertices (got " + std::to_string(n) + ")");
    if (n < 1)
        return {};

    std::vector<Graph> level;
    {
        Graph k1(1);
        if (keep(k1))
            level.push_back(k1);
    }
    for (int m = 2; m <= n; ++m) {
        std::vector<std::pair<std::uint64_t, Graph>> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& g : level) {
            std::vector<Edge> base = g.edges();
            for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                std::vector<Edge> edges = base;
                for (int u = 0; u < m - 1; ++u)
                    if (mask & (1u << u))
                        edges.emplace_back(m - 1, u);
                Graph h(m, edges);
                if (!keep(h))
                    continue;
                std::uint64_t code = canonical_code(h);
                if (seen.insert(code).second)
                    next.emplace_back(code, std::move(h));
            }
        }
        std::sort(next.begin(), next.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [code, h] : next)
            level.push_back(std::move(h));
    }
    return level;
}

namespace {

Graph clique_graph(int w)
{
    std::vector<Edge> edges;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v)
            edges.emplace_back(u, v);
    return Graph(w, edges);
}

Graph two_cliques(int w)
{
    std::vector<Edge> edges;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v) {
            edges.emplace_back(u, v);
            edges.emplace_back(w + u, w + v);
        }
    return Graph(2 * w, edges);
}

// K_w plus extra vertices; attachments[i] lists the clique ids vertex w+i is
// adjacent to, extra_edges are among the extra vertices (0-based offsets).
Graph clique_plus(int w, const std::vector<std::vector<int>>& attachments,
    const std::vector<Edge>& extra_edges = {})
{
    std::vector<Edge> edges;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v)
            edges.emplace_back(u, v);
    for (std::size_t i = 0; i < attachments.size(); ++i)
        for (int a : attachments[i])
            edges.emplace_back(w + static_cast<int>(i), a);
    for (auto [x, y] : extra_edges)
        edges.emplace_back(w + x, w + y);
    return Graph(w + static_cast<int>(attachments.size()), edges);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

void add_omega4_case_tree(std::vector<Graph>& out)
{
    out.push_back(clique_plus(4, {{0}, {1}}, {{0, 1}})); // case 1 cross edge
    out.push_back(clique_plus(4, {{0}, {1}}));           // subcase 2.1
    out.push_back(clique_plus(4, {{0}}));                // 2.2.a, K1 component
    out.push_back(clique_plus(4, {{0}, {0}}, {{0, 1}})); // 2.2.a, K2
    out.push_back(clique_plus(4, {{0}, {0}, {0}}, {{0, 1}, {0, 2}, {1, 2}})); // 2.2.a, K3
    out.push_back(clique_plus(4, {{0}, {0}}));           // 2.2.b, two K1 components
    // 2.2.b with a K3 component plus a K1 component
    out.push_back(clique_plus(4, {{0}, {0}, {0}, {0}}, {{0, 1}, {0, 2}, {1, 2}}));
    out.push_back(two_cliques(4)); // case 2 with C13 and C23 empty
}

// planted K_w with a few attached vertices in the C_23 / C_13 / C_12 roles;
// deterministic grid, filtered by class membership downstream
void add_large_omega_family(std::vector<Graph>& out)
{
    for (int w : {5, 6})
        for (int n23 : {0, 1, 2})
            for (int n13 : {0, 1})
                for (int n12 : {0, 1, 2})
                    for (int attach12 : {0, 1})
                        for (int pair12 : {0, 1})
                            for (int cross : {0, 1}) {
                                if (pair12 && n12 < 2)
                                    continue;
                                if (cross && (n23 == 0 || n13 == 0))
                                    continue;
                                std::vector<std::vector<int>> att;
                                for (int i = 0; i < n23; ++i)
                                    att.push_back({0});
                                for (int i = 0; i < n13; ++i)
                                    att.push_back({1});
                                for (int i = 0; i < n12; ++i)
                                    att.push_back(attach12 ? std::vector<int>{2}
                                                           : std::vector<int>{});
                                std::vector<Edge> extra;
                                if (pair12)
                                    extra.emplace_back(n23 + n13, n23 + n13 + 1);
                                if (cross)
                                    extra.emplace_back(0, n23);
                                out.push_back(clique_plus(w, att, extra));
                            }
}

std::vector<Graph> structured_seeds(GraphClass cls)
{
    std::vector<Graph> pool;

    for (int w = 2; w <= 6; ++w) {
        pool.push_back(clique_graph(w));
        pool.push_back(clique_plus(w, {{0}}));       // one pendant-style vertex
        pool.push_back(clique_plus(w, {{0}, {1}}));  // two, at distinct anchors
        pool.push_back(clique_plus(w, {{}}));        // plus an isolated vertex
    }
    pool.push_back(cycle_graph(5));
    pool.push_back(fixture("fig5_base"));
    pool.push_back(fixture("mycielski_grotzsch"));
    pool.push_back(fixture("fig3_w3x4"));

    if (cls == GraphClass::P3P2DiamondFree) {
        add_omega4_case_tree(pool);
        pool.push_back(two_cliques(3));
        add_large_omega_family(pool);
    }
    if (cls == GraphClass::TwoK2DiamondFree) {
        for (int k = 2; k <= 4; ++k)
            pool.push_back(fig5_blow_up(k));
        // small members with all three C blocks in play
        pool.push_back(clique_plus(3, {{0}, {1}, {}}));
        pool.push_back(clique_plus(4, {{0}, {1}, {}}));
        pool.push_back(clique_plus(5, {{0}, {1}, {}}));
    }

    std::vector<Graph> seeds;
    for (auto& g : pool)
        if (check_class(g, cls).member)
            seeds.push_back(std::move(g));
    return seeds;
}

} // namespace

std::vector<Graph> generate_class_instances(const SweepConfig& cfg)
{
    if (cfg.n_min > cfg.n_max || cfg.n_min < 0)
        throw input_error("generate_class_instances: bad vertex range");
    if (cfg.mode == SweepMode::EnumerateAll) {
        if (cfg.n_max > kEnumerateLimit)
            throw capability_error("enumerate_all supports at most "
                + std::to_string(kEnumerateLimit) + " vertices (requested "
                + std::to_string(cfg.n_max) + ")");
        auto keep = [&](const Graph& h) { return check_class(h, cfg.cls).member; };
        std::vector<Graph> out;
        for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n)
            for (auto& g : enumerate_graphs(n, keep))
                out.push_back(std::move(g));
        return out;
    }

    std::vector<Graph> out;
    for (auto& g : structured_seeds(cfg.cls))
        if (g.vertex_count() >= cfg.n_min && g.vertex_count() <= cfg.n_max)
            out.push_back(std::move(g));

    std::mt19937_64 rng(cfg.seed);
    int target = cfg.sample_count;
    const int max_passes = 400;
    for (int pass = 0; pass < max_passes && static_cast<int>(out.size()) < target; ++pass) {
        for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) {
            for (int d = 1; d <= 9; ++d) {
                if (static_cast<int>(out.size()) >= target)
                    break;
                unsigned threshold = static_cast<unsigned>(d) * 4096 / 10;
                std::vector<Edge> edges;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if ((rng() & 4095u) < threshold)
                            edges.emplace_back(u, v);
                Graph g(n, edges);
                if (check_class(g, cfg.cls).member)
                    out.push_back(std::move(g));
            }
        }
    }
    return out;
}

std::string case_token(const std::string& trace)
{
    for (const char* t : {"case 1", "subcase 2.1", "case 2.2.a (K1)", "case 2.2.a (K2/K3)",
             "case 2.2.b"})
        if (trace.find(t) != std::string::npos)
            return t;
    if (trace.find("C12->1, C13->3, C23->2") != std::string::npos)
        return "omega>=3 exact"; // the 2k2diamond omega-colouring
    if (trace.find("perfect") != std::string::npos)
        return trace.rfind("omega=4", 0) == 0 ? "case 2 (perfect)" : "perfect";
    if (trace.rfind("omega=2", 0) == 0)
        return "omega=2";
    if (trace.rfind("omega=3", 0) == 0)
        return trace.find("C13 and C23 empty") != std::string::npos ? "omega=3 (C13,C23 empty)"
                                                                    : "omega=3";
    return "other";
}

namespace {

std::string edge_text(const Edge& e)
{
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

std::string vertices_text(const std::vector<int>& vs)
{
    std::string s = "(";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(vs[i]);
    }
    return s + ")";
}

std::vector<std::vector<int>> clique_orderings(const std::vector<int>& clique)
{
    std::vector<std::vector<int>> out;
    if (clique.size() <= 4) {
        std::vector<int> ord = clique;
        std::sort(ord.begin(), ord.end());
        do {
            out.push_back(ord);
        } while (std::next_permutation(ord.begin(), ord.end()));
    } else {
        out.push_back(clique);
        std::vector<int> rev(clique.rbegin(), clique.rend());
        out.push_back(rev);
        std::vector<int> rot(clique.begin() + 1, clique.end());
        rot.push_back(clique.front());
        out.push_back(rot);
    }
    return out;
}

struct InstanceOutcome {
    int n = 0, m = 0, omega = 0;
    int chi = -1;
    int colours = -1;
    int bound = 0;
    std::string token;
    bool ok = true;
};

} // namespace

SweepReport run_suite(const SweepConfig& cfg)
{
    SweepReport rep;
    rep.config = cfg;
    std::vector<Graph> instances = generate_class_instances(cfg);
    rep.instances_tested = static_cast<int>(instances.size());

    std::vector<InstanceOutcome> outcomes;

    for (int idx = 0; idx < static_cast<int>(instances.size()); ++idx) {
        const Graph& g = instances[idx];
        InstanceOutcome rec;
        rec.n = g.vertex_count();
        rec.m = g.edge_count();
        auto fail = [&](const std::string& prop, const std::string& wit) {
            rep.failures.push_back({idx, prop, wit, encode_edge_list(g)});
            rec.ok = false;
        };

        auto member = check_class(g, cfg.cls);
        if (!member.member) {
            fail("class-membership", describe(g, *member.witness));
            outcomes.push_back(rec);
            continue;
        }

        std::vector<int> a = max_clique_exact(g);
        int w = static_cast<int>(a.size());
        rec.omega = w;
        rec.bound = bound_for_class(cfg.cls, std::max(w, 1)).bound;

        if (cfg.inject == FaultInjection::Partition) {
            WagonPartition p = build_partition(g, a);
            bool movable = false;
            int from = -1;
            for (int b = 0; b < static_cast<int>(p.c_blocks.size()); ++b)
                if (!p.c_blocks[b].empty()) {
                    from = b;
                    movable = true;
                    break;
                }
            bool from_i = false;
            if (!movable)
                for (int ai = 0; ai < w; ++ai)
                    if (!p.i_sets[ai].empty()) {
                        from = ai;
                        from_i = true;
                        movable = true;
                        break;
                    }
            if (!movable) {
                outcomes.push_back(rec);
                continue;
            }
            ++rep.injection_eligible;
            int v;
            if (!from_i) {
                v = p.c_blocks[from][0];
                p.c_blocks[from].erase(p.c_blocks[from].begin());
                if (p.c_blocks.size() > 1)
                    p.c_blocks[(from + 1) % p.c_blocks.size()].push_back(v);
                else
                    p.i_sets[0].push_back(v);
            } else {
                v = p.i_sets[from][0];
                p.i_sets[from].erase(p.i_sets[from].begin());
                int to = (from + 1) % w;
                if (to != from)
                    p.i_sets[to].push_back(v);
                // with a single I set the vertex is simply dropped, which the
                // coverage check must flag
            }
            auto violation = validate_partition(g, p);
            if (violation) {
                bool mentions = std::find(violation->vertices.begin(), violation->vertices.end(), v)
                    != violation->vertices.end();
                fail("partition-invalid",
                    violation->what + " " + vertices_text(violation->vertices)
                        + (mentions ? "" : " [moved vertex not cited]"));
            } else {
                fail("injection-undetected", "moved vertex " + std::to_string(v));
            }
            outcomes.push_back(rec);
            continue;
        }

        if (cfg.inject == FaultInjection::Colouring) {
            if (g.edge_count() == 0) {
                outcomes.push_back(rec);
                continue;
            }
            ++rep.injection_eligible;
            Colouring col;
            if (w >= 2) {
                switch (cfg.cls) {
                case GraphClass::P3P2Free:
                case GraphClass::TwoK2Free: col = colour_p3p2(g); break;
                case GraphClass::P4P2Free: col = colour_p4p2(g); break;
                case GraphClass::P3P2DiamondFree: col = colour_p3p2_diamond(g).colouring; break;
                case GraphClass::TwoK2DiamondFree: col = colour_2k2_diamond(g).colouring; break;
                }
            }
            Edge target = g.edges().front();
            col.assignment[target.second] = col.assignment[target.first];
            col.finalize();
            auto check = verify_colouring(g, col);
            if (check.proper) {
                fail("injection-undetected", "monochromatic edge " + edge_text(target));
            } else {
                // the reported edge must be the least monochromatic one
                std::optional<Edge> least;
                for (auto e : g.edges())
                    if (col.assignment[e.first] == col.assignment[e.second]) {
                        least = e;
                        break;
                    }
                if (least && *least == *check.offending_edge)
                    fail("colouring-improper", "edge " + edge_text(*check.offending_edge));
                else
                    fail("injection-wrong-witness", "edge " + edge_text(*check.offending_edge));
            }
            outcomes.push_back(rec);
            continue;
        }

        for (const auto& ord : clique_orderings(a)) {
            WagonPartition p;
            try {
                p = build_partition(g, ord);
            } catch (const std::exception& e) {
                fail("partition-build", e.what());
                continue;
            }
            auto claims = check_claims(g, p, cfg.cls);
            if (claims.partition_violation) {
                fail("partition-structure",
                    claims.partition_violation->what + " "
                        + vertices_text(claims.partition_violation->vertices));
                continue;
            }
            for (const auto& c : claims.claims)
                if (c.applicable && !c.holds)
                    fail("claim-" + std::to_string(c.claim),
                        (c.witness ? vertices_text(*c.witness) : std::string("-"))
                            + (c.note.empty() ? "" : " " + c.note));
        }

        std::optional<int> chi;
        if (g.vertex_count() <= kExactChromaticLimit) {
            chi = chromatic_number_exact(g).chi;
            rec.chi = *chi;
            if (*chi < w)
                fail("oracle-sandwich-omega", "chi=" + std::to_string(*chi));
        }

        struct Run {
            std::string name;
            Colouring col;
            std::string trace;
        };
        std::vector<Run> runs;
        try {
            if (w <= 1) {
                Colouring trivial;
                trivial.assignment.assign(g.vertex_count(), 1);
                trivial.finalize();
                runs.push_back({"trivial", std::move(trivial), ""});
            } else {
                switch (cfg.cls) {
                case GraphClass::P3P2Free:
                    runs.push_back({"colour_p3p2", colour_p3p2(g), ""});
                    runs.push_back({"colour_p4p2", colour_p4p2(g), ""});
                    break;
                case GraphClass::TwoK2Free:
                    runs.push_back({"colour_p3p2", colour_p3p2(g), ""});
                    break;
                case GraphClass::P4P2Free:
                    runs.push_back({"colour_p4p2", colour_p4p2(g), ""});
                    break;
                case GraphClass::P3P2DiamondFree: {
                    auto t = colour_p3p2_diamond(g);
                    runs.push_back({"colour_p3p2_diamond", std::move(t.colouring), t.case_trace});
                    break;
                }
                case GraphClass::TwoK2DiamondFree: {
                    auto t = colour_2k2_diamond(g);
                    runs.push_back({"colour_2k2_diamond", std::move(t.colouring), t.case_trace});
                    break;
                }
                }
            }
        } catch (const std::exception& e) {
            fail("colouring-exception", e.what());
        }

        for (const auto& r : runs) {
            auto check = verify_colouring(g, r.col);
            if (!check.proper)
                fail(r.name + "-proper", "edge " + edge_text(*check.offending_edge));
            if (r.col.colours_used > rec.bound)
                fail(r.name + "-bound", std::to_string(r.col.colours_used) + " colours, bound "
                        + std::to_string(rec.bound));
            if (chi && r.col.colours_used < *chi)
                fail(r.name + "-sandwich",
                    std::to_string(r.col.colours_used) + " colours below chi=" + std::to_string(*chi));
        }

        if (!runs.empty()) {
            rec.colours = runs.front().col.colours_used;
            if (!runs.front().trace.empty())
                rec.token = case_token(runs.front().trace);
        }

        if (cfg.cls == GraphClass::P3P2DiamondFree && w >= 5) {
            if (g.vertex_count() <= kHoleSearchLimit) {
                auto perf = is_perfect_small(g, PerfectnessMode::HoleSearch);
                if (!perf.perfect)
                    fail("perfectness-omega5",
                        perf.witness ? describe(g, *perf.witness) : std::string("-"));
            }
            if (chi && *chi != w)
                fail("chi-equals-omega", "chi=" + std::to_string(*chi));
        }

        if (cfg.cls == GraphClass::TwoK2DiamondFree && !runs.empty()) {
            int used = runs.front().col.colours_used;
            if (w >= 3) {
                if (used != w)
                    fail("exact-omega-colours", std::to_string(used) + " colours, omega "
                            + std::to_string(w));
                if (chi && *chi != w)
                    fail("chi-equals-omega", "chi=" + std::to_string(*chi));
            } else if (w == 2) {
                if (used > 3)
                    fail("omega2-three-colours", std::to_string(used));
                if (used == 3 && build_partition(g, a).c_empty(1, 2))
                    fail("third-colour-unneeded", "C12 empty");
            }
            if (g.vertex_count() <= 9) {
                auto hole = is_perfect_small(g, PerfectnessMode::HoleSearch);
                auto sweep = is_perfect_small(g, PerfectnessMode::SubgraphSweep);
                if (hole.perfect != sweep.perfect)
                    fail("perfectness-modes-disagree",
                        std::string("hole_search=") + (hole.perfect ? "true" : "false")
                            + " subgraph_sweep=" + (sweep.perfect ? "true" : "false"));
                if (w >= 4 && !hole.perfect)
                    fail("perfectness-omega4",
                        hole.witness ? describe(g, *hole.witness) : std::string("-"));
            }
        }

        auto& os = rep.by_omega[w];
        ++os.instances;
        os.bound = rec.bound;
        if (rec.colours > os.max_colours)
            os.max_colours = rec.colours;
        if (rec.chi > os.max_chi)
            os.max_chi = rec.chi;
        if (!rec.token.empty()) {
            auto& cs = rep.by_case[rec.token];
            ++cs.count;
            if (rec.colours > cs.max_colours)
                cs.max_colours = rec.colours;
        }
        outcomes.push_back(rec);
    }

    // serialize per-instance records now so the report is self-contained
    std::ostringstream records;
    records << "config class=" << class_name(cfg.cls) << " n_min=" << cfg.n_min
            << " n_max=" << cfg.n_max << " mode=" << mode_name(cfg.mode)
            << " samples=" << cfg.sample_count << " seed=" << cfg.seed
            << " inject=" << injection_name(cfg.inject) << '\n';
    for (int idx = 0; idx < static_cast<int>(outcomes.size()); ++idx) {
        const auto& rc = outcomes[idx];
        records << "instance index=" << idx << " n=" << rc.n << " m=" << rc.m
                << " omega=" << rc.omega << " chi=";
        if (rc.chi >= 0)
            records << rc.chi;
        else
            records << '-';
        records << " colours=";
        if (rc.colours >= 0)
            records << rc.colours;
        else
            records << '-';
        records << " bound=" << rc.bound << " case=\"" << (rc.token.empty() ? "-" : rc.token)
                << "\" status=" << (rc.ok ? "ok" : "fail") << '\n';
    }
    for (const auto& f : rep.failures)
        records << "failure index=" << f.instance << " property=" << f.property << " witness=\""
                << f.witness << "\" graph=\"" << f.graph << "\"\n";
    for (const auto& [w, os] : rep.by_omega)
        records << "omega " << w << " instances=" << os.instances
                << " max_colours=" << os.max_colours << " bound=" << os.bound
                << " max_chi=" << os.max_chi << '\n';
    for (const auto& [token, cs] : rep.by_case)
        records << "case \"" << token << "\" count=" << cs.count
                << " max_colours=" << cs.max_colours << '\n';
    records << "summary instances=" << rep.instances_tested
            << " failures=" << rep.failures.size()
            << " injection_eligible=" << rep.injection_eligible << '\n';
    rep.records_text = records.str();

    return rep;
}

std::string SweepReport::to_records() const
{
    return records_text;
}

std::string SweepReport::summary() const
{
    std::ostringstream out;
    out << "class " << class_name(config.cls) << ", " << mode_name(config.mode) << " sweep, n in ["
        << config.n_min << ", " << config.n_max << "]";
    if (config.mode == SweepMode::RandomSample)
        out << ", samples=" << config.sample_count << ", seed=" << config.seed;
    if (config.inject != FaultInjection::None)
        out << ", inject=" << injection_name(config.inject);
    out << '\n';
    out << "instances tested: " << instances_tested << '\n';
    for (const auto& [w, os] : by_omega) {
        out << "  omega=" << w << ": " << os.instances << " instance(s), max colours "
            << os.max_colours << " vs bound " << os.bound;
        if (os.max_chi >= 0)
            out << ", max chi " << os.max_chi;
        out << '\n';
    }
    for (const auto& [token, cs] : by_case)
        out << "  branch " << token << ": " << cs.count << " instance(s), max colours "
            << cs.max_colours << '\n';
    if (config.inject != FaultInjection::None)
        out << "injection-eligible instances: " << injection_eligible << '\n';
    if (failures.empty())
        out << "result: PASS (zero failures)\n";
    else {
        out << "result: FAIL (" << failures.size() << " failure(s))\n";
        for (const auto& f : failures)
            out << "  instance " << f.instance << " " << f.property << " witness=" << f.witness
                << " graph=" << f.graph << '\n';
    }
    return out.str();
}

} // namespace wagon
