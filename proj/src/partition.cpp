#include "wagon/partition.hpp"

#include "wagon/errors.hpp"
#include "wagon/exact.hpp"

#include <algorithm>
#include <sstream>

namespace wagon {

int WagonPartition::block_index(int i, int j, int omega)
{
    // pairs (1,2),(1,3),...,(1,w),(2,3),... in lexicographic order
    return (i - 1) * omega - (i * (i - 1)) / 2 + (j - i - 1);
}

std::pair<int, int> WagonPartition::block_pair(int index) const
{
    int w = omega();
    for (int i = 1; i < w; ++i) {
        int row = w - i;
        if (index < row)
            return {i, i + 1 + index};
        index -= row;
    }
    return {0, 0};
}

const std::vector<int>& WagonPartition::c(int i, int j) const
{
    return c_blocks[block_index(i, j, omega())];
}

std::vector<int>& WagonPartition::c(int i, int j)
{
    return c_blocks[block_index(i, j, omega())];
}

std::string WagonPartition::to_text(const Graph& g) const
{
    std::ostringstream out;
    out << "clique (omega=" << omega() << "):";
    for (int v : clique)
        out << ' ' << g.display_name(v);
    out << '\n';
    auto emit = [&](const std::string& name, const std::vector<int>& vs) {
        out << name << ':';
        if (vs.empty())
            out << " (empty)";
        for (int v : vs)
            out << ' ' << g.display_name(v);
        out << '\n';
    };
    for (int idx = 0; idx < static_cast<int>(c_blocks.size()); ++idx) {
        auto [i, j] = block_pair(idx);
        emit("C[" + std::to_string(i) + "," + std::to_string(j) + "]", c_blocks[idx]);
    }
    for (int a = 1; a <= omega(); ++a)
        emit("I[" + std::to_string(a) + "]", i_sets[a - 1]);
    return out.str();
}

WagonPartition build_partition(const Graph& g, const std::vector<int>& ordered_clique)
{
    int n = g.vertex_count();
    int w = static_cast<int>(ordered_clique.size());

    std::vector<char> in_a(n, 0);
    for (int v : ordered_clique) {
        if (v < 0 || v >= n)
            throw input_error("build_partition: clique vertex " + std::to_string(v)
                + " out of range");
        if (in_a[v])
            throw input_error("build_partition: repeated clique vertex " + std::to_string(v));
        in_a[v] = 1;
    }
    for (int x = 0; x < w; ++x)
        for (int y = x + 1; y < w; ++y)
            if (!g.adjacent(ordered_clique[x], ordered_clique[y]))
                throw input_error("build_partition: vertices " + std::to_string(ordered_clique[x])
                    + " and " + std::to_string(ordered_clique[y]) + " are not adjacent");
    if (w != clique_number(g))
        throw input_error("build_partition: clique of size " + std::to_string(w)
            + " is not maximum (clique number is " + std::to_string(clique_number(g)) + ")");

    WagonPartition p;
    p.clique = ordered_clique;
    p.c_blocks.assign(w * (w - 1) / 2, {});
    p.i_sets.assign(w, {});

    std::vector<char> placed = in_a;
    for (int i = 1; i <= w; ++i)
        for (int j = i + 1; j <= w; ++j) {
            auto& block = p.c(i, j);
            for (int v = 0; v < n; ++v)
                if (!placed[v] && !g.adjacent(v, p.clique[i - 1])
                    && !g.adjacent(v, p.clique[j - 1])) {
                    block.push_back(v);
                    placed[v] = 1;
                }
        }

    for (int v = 0; v < n; ++v) {
        if (placed[v])
            continue;
        int missed = 0, miss_pos = 0;
        for (int a = 1; a <= w; ++a)
            if (!g.adjacent(v, p.clique[a - 1])) {
                ++missed;
                miss_pos = a;
            }
        // missed == 0 would contradict maximality, missed >= 2 the C loop
        if (missed != 1)
            throw input_error("build_partition: vertex " + std::to_string(v) + " misses "
                + std::to_string(missed) + " clique vertices after the C pass");
        p.i_sets[miss_pos - 1].push_back(v);
    }
    return p;
}

namespace {

std::optional<PartitionViolation> check_structure(const Graph& g, const WagonPartition& p)
{
    int n = g.vertex_count();
    int w = p.omega();

    std::vector<int> owner(n, -1); // 0 = A, 1 + idx = block, 1000000 + a = I_a
    auto claim_vertex = [&](int v, int tag) -> std::optional<PartitionViolation> {
        if (v < 0 || v >= n)
            return PartitionViolation{"vertex out of range", {v}};
        if (owner[v] != -1)
            return PartitionViolation{"vertex appears in two pieces", {v}};
        owner[v] = tag;
        return std::nullopt;
    };

    for (int v : p.clique)
        if (auto bad = claim_vertex(v, 0))
            return bad;
    for (int idx = 0; idx < static_cast<int>(p.c_blocks.size()); ++idx)
        for (int v : p.c_blocks[idx])
            if (auto bad = claim_vertex(v, 1 + idx))
                return bad;
    for (int a = 1; a <= w; ++a)
        for (int v : p.i_sets[a - 1])
            if (auto bad = claim_vertex(v, 1000000 + a))
                return bad;
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            return PartitionViolation{"vertex not covered by the partition", {v}};

    if (static_cast<int>(p.c_blocks.size()) != w * (w - 1) / 2
        || static_cast<int>(p.i_sets.size()) != w)
        return PartitionViolation{"piece counts do not match omega", {}};

    for (int x = 0; x < w; ++x)
        for (int y = x + 1; y < w; ++y)
            if (!g.adjacent(p.clique[x], p.clique[y]))
                return PartitionViolation{"A is not a clique", {p.clique[x], p.clique[y]}};
    if (w != clique_number(g))
        return PartitionViolation{"A is not a maximum clique", p.clique};

    // C_ij: non-adjacent to i and j, and (i,j) is the lexicographically first
    // such pair, which also forces the anchor adjacencies k < j, k != i.
    for (int i = 1; i <= w; ++i)
        for (int j = i + 1; j <= w; ++j)
            for (int v : p.c(i, j)) {
                for (int bi = 1; bi <= w; ++bi)
                    for (int bj = bi + 1; bj <= w; ++bj) {
                        bool non_adjacent_pair = !g.adjacent(v, p.clique[bi - 1])
                            && !g.adjacent(v, p.clique[bj - 1]);
                        if (bi == i && bj == j) {
                            if (!non_adjacent_pair)
                                return PartitionViolation{
                                    "C[" + std::to_string(i) + "," + std::to_string(j)
                                        + "] member adjacent to an anchor-pair vertex",
                                    {v}};
                            goto pair_ok;
                        }
                        if (non_adjacent_pair)
                            return PartitionViolation{
                                "vertex belongs to the earlier block C[" + std::to_string(bi) + ","
                                    + std::to_string(bj) + "], not C[" + std::to_string(i) + ","
                                    + std::to_string(j) + "]",
                                {v}};
                    }
            pair_ok:;
            }

    for (int a = 1; a <= w; ++a)
        for (int v : p.i_set(a)) {
            for (int b = 1; b <= w; ++b) {
                bool adj = g.adjacent(v, p.clique[b - 1]);
                if (b == a && adj)
                    return PartitionViolation{
                        "I[" + std::to_string(a) + "] member adjacent to position "
                            + std::to_string(a),
                        {v, p.clique[a - 1]}};
                if (b != a && !adj)
                    return PartitionViolation{
                        "I[" + std::to_string(a) + "] member misses position " + std::to_string(b),
                        {v, p.clique[b - 1]}};
            }
        }

    return std::nullopt;
}

} // namespace

std::optional<PartitionViolation> validate_partition(const Graph& g, const WagonPartition& p)
{
    return check_structure(g, p);
}

namespace {

// first edge inside the vertex set, by ascending pair
std::optional<Edge> edge_within(const Graph& g, const std::vector<int>& vs)
{
    for (std::size_t x = 0; x < vs.size(); ++x)
        for (std::size_t y = x + 1; y < vs.size(); ++y)
            if (g.adjacent(vs[x], vs[y]))
                return Edge{vs[x], vs[y]};
    return std::nullopt;
}

std::optional<Edge> edge_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b)
{
    for (int u : a)
        for (int v : b)
            if (g.adjacent(u, v))
                return Edge{u, v};
    return std::nullopt;
}

int block_clique_number(const Graph& g, const std::vector<int>& block)
{
    if (block.empty())
        return 0;
    return clique_number(induced_subgraph(g, block));
}

} // namespace

ClaimsReport check_claims(const Graph& g, const WagonPartition& p, GraphClass cls)
{
    ClaimsReport out;
    out.partition_violation = validate_partition(g, p);
    if (out.partition_violation)
        return out;

    int w = p.omega();
    bool diamond = forbids_diamond(cls);

    auto report = [&](int claim, bool applicable, bool holds,
                      std::optional<std::vector<int>> witness = std::nullopt,
                      std::string note = {}) {
        if (!applicable) {
            holds = false;
            witness = std::nullopt;
        }
        out.claims.push_back({claim, applicable, holds, std::move(witness), std::move(note)});
    };

    // Claim 1: each [C_ij] is P3-free (so a disjoint union of cliques).
    {
        bool applicable = implies_p3p2_free(cls);
        bool holds = true;
        std::optional<std::vector<int>> witness;
        if (applicable)
            for (const auto& block : p.c_blocks) {
                if (block.empty())
                    continue;
                Graph h = induced_subgraph(g, block);
                if (auto wtn = find_induced(h, PatternKind::P3)) {
                    holds = false;
                    witness = std::vector<int>{block[wtn->vertices[0]], block[wtn->vertices[1]],
                        block[wtn->vertices[2]]};
                    break;
                }
            }
        report(1, applicable, holds, std::move(witness));
    }

    // Claim 2: each I_a is an independent set (needs only maximality of A).
    {
        bool holds = true;
        std::optional<std::vector<int>> witness;
        for (int a = 1; a <= w && holds; ++a)
            if (auto e = edge_within(g, p.i_set(a))) {
                holds = false;
                witness = std::vector<int>{e->first, e->second};
            }
        report(2, true, holds, std::move(witness));
    }

    // Claim 3: omega([C_ij]) <= omega - (j - 2).
    {
        bool holds = true;
        std::optional<std::vector<int>> witness;
        std::string note;
        for (int i = 1; i <= w && holds; ++i)
            for (int j = i + 1; j <= w && holds; ++j) {
                int bw = block_clique_number(g, p.c(i, j));
                if (bw > w - (j - 2)) {
                    holds = false;
                    witness = p.c(i, j);
                    note = "omega([C" + std::to_string(i) + std::to_string(j) + "]) = "
                        + std::to_string(bw);
                }
            }
        report(3, true, holds, std::move(witness), std::move(note));
    }

    // Claim 4: a C5-free member of a diamond class is perfect. Reported via
    // the perfectness checker when the graph is small enough.
    {
        bool c5_free = diamond && !find_induced(g, PatternKind::C5).has_value();
        bool applicable = diamond && c5_free && g.vertex_count() <= kHoleSearchLimit;
        bool holds = true;
        std::optional<std::vector<int>> witness;
        std::string note;
        if (applicable) {
            auto perf = is_perfect_small(g, PerfectnessMode::HoleSearch);
            holds = perf.perfect;
            if (perf.witness)
                witness = perf.witness->vertices;
        } else if (diamond && c5_free) {
            note = "not checked: graph exceeds the hole-search limit";
        }
        report(4, applicable, holds, std::move(witness), std::move(note));
    }

    // Claim 5: C_ij empty for j >= 4.
    {
        bool holds = true;
        std::optional<std::vector<int>> witness;
        for (int i = 1; i <= w && holds; ++i)
            for (int j = std::max(4, i + 1); j <= w && holds; ++j)
                if (!p.c_empty(i, j)) {
                    holds = false;
                    witness = p.c(i, j);
                }
        report(5, diamond, holds, std::move(witness));
    }

    // Claim 6: I_a empty when omega >= 3; independent when omega == 2.
    {
        bool holds = true;
        std::optional<std::vector<int>> witness;
        for (int a = 1; a <= w && holds; ++a) {
            if (w >= 3 && !p.i_set(a).empty()) {
                holds = false;
                witness = p.i_set(a);
            } else if (w == 2) {
                if (auto e = edge_within(g, p.i_set(a))) {
                    holds = false;
                    witness = std::vector<int>{e->first, e->second};
                }
            }
        }
        report(6, diamond, holds, std::move(witness));
    }

    bool have_c13 = w >= 3 && !p.c_empty(1, 3);
    bool have_c23 = w >= 3 && !p.c_empty(2, 3);

    // Claim 7: omega([C_12]) <= omega - 1 when omega >= 3 and C_13 or C_23
    // is nonempty.
    {
        bool applicable = diamond && w >= 3 && (have_c13 || have_c23);
        bool holds = true;
        std::optional<std::vector<int>> witness;
        std::string note;
        if (applicable) {
            int bw = block_clique_number(g, p.c(1, 2));
            if (bw > w - 1) {
                holds = false;
                witness = p.c(1, 2);
                note = "omega([C12]) = " + std::to_string(bw);
            }
        }
        report(7, applicable, holds, std::move(witness), std::move(note));
    }

    // Claim 8: no edges from C_13 to A - {2}, none from C_23 to A - {1}.
    {
        bool applicable = diamond && w >= 3;
        bool holds = true;
        std::optional<std::vector<int>> witness;
        if (applicable) {
            auto scan = [&](const std::vector<int>& block, int allowed_pos) {
                for (int v : block)
                    for (int b = 1; b <= w; ++b)
                        if (b != allowed_pos && g.adjacent(v, p.clique[b - 1])) {
                            holds = false;
                            witness = std::vector<int>{v, p.clique[b - 1]};
                            return;
                        }
            };
            scan(p.c(1, 3), 2);
            if (holds)
                scan(p.c(2, 3), 1);
        }
        report(8, applicable, holds, std::move(witness));
    }

    std::optional<Edge> cross;
    if (w >= 3)
        cross = edge_between(g, p.c(2, 3), p.c(1, 3));

    // Claim 9: endpoints of a [C_23, C_13] edge are isolated inside their
    // own blocks.
    {
        bool applicable = diamond && w >= 4 && cross.has_value();
        bool holds = true;
        std::optional<std::vector<int>> witness;
        if (applicable) {
            for (int a : p.c(2, 3)) {
                for (int b : p.c(1, 3)) {
                    if (!g.adjacent(a, b))
                        continue;
                    for (int c : p.c(2, 3))
                        if (c != a && g.adjacent(a, c)) {
                            holds = false;
                            witness = std::vector<int>{a, b, c};
                        }
                    for (int c : p.c(1, 3))
                        if (c != b && g.adjacent(b, c)) {
                            holds = false;
                            witness = std::vector<int>{a, b, c};
                        }
                    if (!holds)
                        break;
                }
                if (!holds)
                    break;
            }
        }
        report(9, applicable, holds, std::move(witness));
    }

    // Claim 10: with a [C_23, C_13] edge present, both blocks are
    // independent sets.
    {
        bool applicable = diamond && w >= 4 && cross.has_value();
        bool holds = true;
        std::optional<std::vector<int>> witness;
        if (applicable) {
            for (const auto* block : {&p.c(2, 3), &p.c(1, 3)})
                if (auto e = edge_within(g, *block)) {
                    holds = false;
                    witness = std::vector<int>{e->first, e->second};
                    break;
                }
        }
        report(10, applicable, holds, std::move(witness));
    }

    // Claim 11: with [C_23, C_13] empty and at least one block nonempty, a
    // nonempty block forces the other to be independent.
    {
        bool applicable = diamond && w >= 4 && !cross.has_value() && (have_c13 || have_c23);
        bool holds = true;
        std::optional<std::vector<int>> witness;
        if (applicable) {
            if (have_c23)
                if (auto e = edge_within(g, p.c(1, 3))) {
                    holds = false;
                    witness = std::vector<int>{e->first, e->second};
                }
            if (holds && have_c13)
                if (auto e = edge_within(g, p.c(2, 3))) {
                    holds = false;
                    witness = std::vector<int>{e->first, e->second};
                }
        }
        report(11, applicable, holds, std::move(witness));
    }

    // Claim 12: a C_12 vertex is adjacent to at most one vertex of A.
    {
        bool applicable = diamond && w >= 2;
        bool holds = true;
        std::optional<std::vector<int>> witness;
        if (applicable)
            for (int v : p.c(1, 2)) {
                std::vector<int> hits;
                for (int b = 1; b <= w; ++b)
                    if (g.adjacent(v, p.clique[b - 1]))
                        hits.push_back(p.clique[b - 1]);
                if (hits.size() > 1) {
                    holds = false;
                    witness = std::vector<int>{v, hits[0], hits[1]};
                    break;
                }
            }
        report(12, applicable, holds, std::move(witness));
    }

    return out;
}

} // namespace wagon
