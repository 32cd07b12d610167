#include "wagon/colouring.hpp"

#include "wagon/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wagon {

BoundSpec bound_for_class(GraphClass c, int omega)
{
    if (omega < 1)
        throw input_error("bound_for_class: omega must be positive");
    BoundSpec spec{c, omega, 0, false};
    if (omega == 1) {
        spec.bound = 1;
        return spec;
    }
    switch (c) {
    case GraphClass::P3P2Free:
    case GraphClass::P4P2Free:
    case GraphClass::TwoK2Free:
        spec.bound = omega * (omega + 1) * (omega + 2) / 6;
        break;
    case GraphClass::P3P2DiamondFree:
        if (omega == 2)
            spec.bound = omega + 2;
        else if (omega == 3)
            spec.bound = omega + 3;
        else if (omega == 4)
            spec.bound = omega + 1;
        else {
            spec.bound = omega;
            spec.perfect = true;
        }
        break;
    case GraphClass::TwoK2DiamondFree:
        if (omega == 2)
            spec.bound = omega + 1;
        else {
            spec.bound = omega;
            spec.perfect = omega >= 4;
        }
        break;
    }
    return spec;
}

namespace {

// components of the subgraph induced by verts, ordered by least member,
// members ascending
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& verts)
{
    std::vector<std::vector<int>> comps;
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<char> inside(g.vertex_count(), 0);
    for (int v : sorted)
        inside[v] = 1;
    for (int root : sorted) {
        if (seen[root])
            continue;
        std::vector<int> comp, stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.neighbours(v).for_each([&](int u) {
                if (inside[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<Edge> edge_inside(const Graph& g, const std::vector<int>& vs)
{
    for (std::size_t x = 0; x < vs.size(); ++x)
        for (std::size_t y = x + 1; y < vs.size(); ++y)
            if (g.adjacent(vs[x], vs[y]))
                return Edge{vs[x], vs[y]};
    return std::nullopt;
}

bool blocks_have_edge(const Graph& g, const std::vector<int>& a, const std::vector<int>& b)
{
    for (int u : a)
        for (int v : b)
            if (g.adjacent(u, v))
                return true;
    return false;
}

void require_independent(const Graph& g, const std::vector<int>& block, const char* what)
{
    if (auto e = edge_inside(g, block))
        throw std::logic_error(std::string("internal: ") + what + " is not independent (edge "
            + std::to_string(e->first) + "-" + std::to_string(e->second) + ")");
}

// Colours the P3-free block within g: component vertices (ascending) take
// the first |component| palette entries. The palette grows by fresh colours
// on demand up to max_slots total; needing more means a structural claim
// failed upstream.
void colour_block_cliques(const Graph& g, const std::vector<int>& block, std::vector<int> palette,
    int& next_fresh, int max_slots, std::vector<int>& assignment, const char* what)
{
    for (const auto& comp : components_within(g, block)) {
        int need = static_cast<int>(comp.size());
        if (need > max_slots)
            throw std::logic_error(std::string("internal: ") + what + " has a component of size "
                + std::to_string(need) + ", above its certified clique bound");
        while (static_cast<int>(palette.size()) < need)
            palette.push_back(next_fresh++);
        for (int idx = 0; idx < need; ++idx)
            assignment[comp[idx]] = palette[idx];
        for (int x = 0; x < need; ++x)
            for (int y = x + 1; y < need; ++y)
                if (!g.adjacent(comp[x], comp[y]))
                    throw std::logic_error(std::string("internal: ") + what
                        + " component is not a clique");
    }
}

// slot colours 1..k (from a block-local optimal colouring) mapped through a
// palette that extends with fresh colours on demand
void apply_block_slots(const std::vector<int>& block, const Colouring& slots,
    std::vector<int>& palette, int& next_fresh, std::vector<int>& assignment)
{
    for (std::size_t idx = 0; idx < block.size(); ++idx) {
        int s = slots.assignment[idx];
        while (static_cast<int>(palette.size()) < s)
            palette.push_back(next_fresh++);
        assignment[block[idx]] = palette[s - 1];
    }
}

void guard_proper(const Graph& g, Colouring& col, const char* caller)
{
    col.finalize();
    auto check = verify_colouring(g, col);
    if (!check.proper)
        throw std::logic_error(std::string("internal: ") + caller
            + " produced an improper colouring (edge " + std::to_string(check.offending_edge->first)
            + "-" + std::to_string(check.offending_edge->second) + ")");
}

Colouring colour_by_partition_blocks(const Graph& g, GraphClass cls, bool cograph_blocks, const char* caller)
{
    require_class(g, cls, caller);
    int n = g.vertex_count();
    Colouring out;
    out.assignment.assign(n, 0);
    if (n == 0)
        return out;

    std::vector<int> a = max_clique_exact(g);
    WagonPartition p = build_partition(g, a);
    int w = p.omega();
    for (int pos = 1; pos <= w; ++pos)
        out.assignment[p.clique[pos - 1]] = pos;

    int next_fresh = w + 1;
    for (const auto& block : p.c_blocks) {
        if (block.empty())
            continue;
        Graph h = induced_subgraph(g, block);
        Colouring slots;
        try {
            slots = cograph_blocks ? colour_cograph(h) : colour_disjoint_cliques(h);
        } catch (const class_error& e) {
            throw std::logic_error(std::string("internal: block violates its structure claim: ")
                + e.what());
        }
        std::vector<int> palette; // fresh palette per block
        apply_block_slots(block, slots, palette, next_fresh, out.assignment);
    }

    for (int apos = 1; apos <= w; ++apos) {
        require_independent(g, p.i_set(apos), "I_a");
        for (int v : p.i_set(apos))
            out.assignment[v] = apos;
    }

    guard_proper(g, out, caller);
    return out;
}

} // namespace

Colouring colour_disjoint_cliques(const Graph& h)
{
    if (auto w = find_induced(h, PatternKind::P3))
        throw class_error(
            "colour_disjoint_cliques: input has an induced " + describe(h, *w), std::move(*w));
    Colouring out;
    out.assignment.assign(h.vertex_count(), 0);
    std::vector<int> all(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
        all[v] = v;
    for (const auto& comp : components_within(h, all))
        for (std::size_t idx = 0; idx < comp.size(); ++idx)
            out.assignment[comp[idx]] = static_cast<int>(idx) + 1;
    out.finalize();
    return out;
}

Colouring colour_cograph(const Graph& h)
{
    if (auto w = find_induced(h, PatternKind::P4))
        throw class_error("colour_cograph: input has an induced " + describe(h, *w), std::move(*w));
    int n = h.vertex_count();
    Colouring out;
    out.assignment.assign(n, 0);
    if (n == 0)
        return out;
    Graph co = complement(h);

    // union nodes reuse their children's palette, join nodes stack palettes
    auto rec = [&](auto&& self, const std::vector<int>& verts, int offset) -> int {
        if (verts.size() == 1) {
            out.assignment[verts[0]] = offset + 1;
            return 1;
        }
        auto comps = components_within(h, verts);
        if (comps.size() > 1) {
            int chi = 0;
            for (const auto& comp : comps)
                chi = std::max(chi, self(self, comp, offset));
            return chi;
        }
        auto cocomps = components_within(co, verts);
        if (cocomps.size() > 1) {
            int used = 0;
            for (const auto& part : cocomps)
                used += self(self, part, offset + used);
            return used;
        }
        throw std::logic_error("internal: connected, co-connected multi-vertex cograph");
    };

    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    rec(rec, all, 0);
    out.finalize();
    return out;
}

Colouring colour_p3p2(const Graph& g)
{
    return colour_by_partition_blocks(g, GraphClass::P3P2Free, false, "colour_p3p2");
}

Colouring colour_p4p2(const Graph& g)
{
    return colour_by_partition_blocks(g, GraphClass::P4P2Free, true, "colour_p4p2");
}

TracedColouring colour_p3p2_diamond(const Graph& g)
{
    require_class(g, GraphClass::P3P2DiamondFree, "colour_p3p2_diamond");
    std::vector<int> a = max_clique_exact(g);
    int w = static_cast<int>(a.size());
    if (w < 2)
        throw input_error("colour_p3p2_diamond: clique number must be at least 2 (got "
            + std::to_string(w) + ")");

    int n = g.vertex_count();
    TracedColouring out;
    out.colouring.assignment.assign(n, 0);
    auto& colour = out.colouring.assignment;
    std::string& trace = out.case_trace;
    trace = "omega=" + std::to_string(w);

    if (w >= 5) {
        out.colouring = chromatic_number_exact(g).colouring;
        trace += ": C5-free, perfect; exact colouring";
        guard_proper(g, out.colouring, "colour_p3p2_diamond");
        return out;
    }

    WagonPartition p = build_partition(g, a);
    for (int pos = 1; pos <= w; ++pos)
        colour[p.clique[pos - 1]] = pos;
    int next_fresh = w + 1;

    if (w == 2) {
        for (int apos : {1, 2}) {
            require_independent(g, p.i_set(apos), "I_a");
            for (int v : p.i_set(apos))
                colour[v] = apos;
        }
        colour_block_cliques(g, p.c(1, 2), {}, next_fresh, 2, colour, "[C12] at omega=2");
        trace += ": A->{1,2}, I1->1, I2->2, C12->fresh";
    } else if (w == 3) {
        for (int apos = 1; apos <= 3; ++apos)
            if (!p.i_set(apos).empty())
                throw std::logic_error("internal: nonempty I_a with omega >= 3");
        bool has13 = !p.c_empty(1, 3);
        bool has23 = !p.c_empty(2, 3);
        if (!has13 && !has23) {
            // The two-colour step for [C12] needs C13 or C23 nonempty; with
            // both empty [C12] may hold a triangle, so allow a third colour.
            colour_block_cliques(g, p.c(1, 2), {1, 2}, next_fresh, 3, colour, "[C12] at omega=3");
            trace += ", C13 and C23 empty: C12->{1,2,+fresh}";
        } else {
            colour_block_cliques(g, p.c(1, 2), {1, 2}, next_fresh, 2, colour, "[C12] at omega=3");
            colour_block_cliques(g, p.c(2, 3), {3}, next_fresh, 2, colour, "[C23] at omega=3");
            colour_block_cliques(g, p.c(1, 3), {}, next_fresh, 2, colour, "[C13] at omega=3");
            trace += ": C12->{1,2}, C23->{3,+fresh}, C13->fresh";
        }
    } else { // w == 4
        bool cross = blocks_have_edge(g, p.c(2, 3), p.c(1, 3));
        if (cross) {
            require_independent(g, p.c(2, 3), "[C23] in case 1");
            require_independent(g, p.c(1, 3), "[C13] in case 1");
            for (int v : p.c(1, 3))
                colour[v] = 3;
            for (int v : p.c(2, 3))
                colour[v] = 4;
            colour_block_cliques(g, p.c(1, 2), {1, 2}, next_fresh, 3, colour, "[C12] in case 1");
            trace += ", [C23,C13] edge present -> case 1: C12->{1,2,+fresh}, C13->3, C23->4";
        } else if (p.c_empty(1, 3) && p.c_empty(2, 3)) {
            out.colouring = chromatic_number_exact(g).colouring;
            trace += ", [C23,C13] empty, C13 and C23 empty -> case 2: C5-free, perfect; "
                     "exact colouring";
            guard_proper(g, out.colouring, "colour_p3p2_diamond");
            return out;
        } else {
            if (p.c_empty(2, 3)) {
                std::swap(a[0], a[1]);
                p = build_partition(g, a);
                for (int pos = 1; pos <= w; ++pos)
                    colour[p.clique[pos - 1]] = pos;
                trace += ", positions 1,2 swapped so that C23 is nonempty";
            }
            if (!p.c_empty(1, 3)) {
                require_independent(g, p.c(2, 3), "[C23] in subcase 2.1");
                require_independent(g, p.c(1, 3), "[C13] in subcase 2.1");
                for (int v : p.c(1, 3))
                    colour[v] = 3;
                for (int v : p.c(2, 3))
                    colour[v] = 3;
                colour_block_cliques(
                    g, p.c(1, 2), {1, 2}, next_fresh, 3, colour, "[C12] in subcase 2.1");
                trace += ", [C23,C13] empty, both nonempty -> subcase 2.1: "
                         "C12->{1,2,+fresh}, C13->3, C23->3";
            } else {
                auto comps = components_within(g, p.c(2, 3));
                if (comps.size() == 1) {
                    if (comps[0].size() == 1) {
                        colour[comps[0][0]] = 3;
                        colour_block_cliques(g, p.c(1, 2), {1, 2}, next_fresh, 3, colour,
                            "[C12] in case 2.2.a");
                        trace += ", [C23,C13] empty, C13 empty, C23 one component -> "
                                 "case 2.2.a (K1): C23->3, C12->{1,2,+fresh}";
                    } else {
                        require_independent(g, p.c(1, 2), "[C12] in case 2.2.a");
                        const std::vector<int> palette{2, 3, 4};
                        if (comps[0].size() > 3)
                            throw std::logic_error("internal: [C23] component above K3");
                        for (std::size_t idx = 0; idx < comps[0].size(); ++idx)
                            colour[comps[0][idx]] = palette[idx];
                        for (int v : p.c(1, 2))
                            colour[v] = 1;
                        trace += ", [C23,C13] empty, C13 empty, C23 one component -> "
                                 "case 2.2.a (K2/K3): C23->{2,3,4}, C12->1";
                    }
                } else {
                    // K3 components of [C23] have no edges to C12 (an edge
                    // would force a diamond or a P3 u P2 through positions
                    // 2,3,4), so giving them colour 2 cannot clash with C12.
                    colour_block_cliques(g, p.c(1, 2), {1, 2}, next_fresh, 2, colour,
                        "[C12] in case 2.2.b");
                    bool saw_k3 = false;
                    for (const auto& comp : comps) {
                        if (comp.size() > 3)
                            throw std::logic_error("internal: [C23] component above K3");
                        if (comp.size() == 3) {
                            saw_k3 = true;
                            if (blocks_have_edge(g, comp, p.c(1, 2)))
                                throw std::logic_error(
                                    "internal: K3 component of [C23] touches C12");
                            for (std::size_t idx = 0; idx < 3; ++idx)
                                colour[comp[idx]] = static_cast<int>(idx) + 2;
                        } else {
                            for (std::size_t idx = 0; idx < comp.size(); ++idx)
                                colour[comp[idx]] = static_cast<int>(idx) + 3;
                        }
                    }
                    trace += ", [C23,C13] empty, C13 empty, C23 has "
                        + std::to_string(comps.size()) + " components -> case 2.2.b: C23->{3,4}"
                        + (saw_k3 ? " and K3 components->{2,3,4}" : "") + ", C12->{1,2}";
                }
            }
        }
    }

    guard_proper(g, out.colouring, "colour_p3p2_diamond");
    return out;
}

TracedColouring colour_2k2_diamond(const Graph& g)
{
    require_class(g, GraphClass::TwoK2DiamondFree, "colour_2k2_diamond");
    std::vector<int> a = max_clique_exact(g);
    int w = static_cast<int>(a.size());
    if (w < 2)
        throw input_error("colour_2k2_diamond: clique number must be at least 2 (got "
            + std::to_string(w) + ")");

    WagonPartition p = build_partition(g, a);
    TracedColouring out;
    out.colouring.assignment.assign(g.vertex_count(), 0);
    auto& colour = out.colouring.assignment;
    for (int pos = 1; pos <= w; ++pos)
        colour[p.clique[pos - 1]] = pos;
    std::string& trace = out.case_trace;
    trace = "omega=" + std::to_string(w);

    if (w == 2) {
        for (int apos : {1, 2}) {
            require_independent(g, p.i_set(apos), "I_a");
            for (int v : p.i_set(apos))
                colour[v] = apos;
        }
        require_independent(g, p.c(1, 2), "[C12]");
        for (int v : p.c(1, 2))
            colour[v] = 3;
        trace += p.c_empty(1, 2) ? ": A->{1,2}, I1->1, I2->2, C12 empty"
                                 : ": A->{1,2}, I1->1, I2->2, C12->3";
    } else {
        for (int apos = 1; apos <= w; ++apos)
            if (!p.i_set(apos).empty())
                throw std::logic_error("internal: nonempty I_a with omega >= 3");
        for (int i = 1; i <= w; ++i)
            for (int j = std::max(i + 1, 4); j <= w; ++j)
                if (!p.c_empty(i, j))
                    throw std::logic_error("internal: nonempty C_ij with j >= 4");
        require_independent(g, p.c(1, 2), "[C12]");
        require_independent(g, p.c(1, 3), "[C13]");
        require_independent(g, p.c(2, 3), "[C23]");
        for (int v : p.c(1, 2))
            colour[v] = 1;
        for (int v : p.c(1, 3))
            colour[v] = 3;
        for (int v : p.c(2, 3))
            colour[v] = 2;
        trace += ": A->{1.." + std::to_string(w) + "}, C12->1, C13->3, C23->2";
    }

    guard_proper(g, out.colouring, "colour_2k2_diamond");
    return out;
}

} // namespace wagon
