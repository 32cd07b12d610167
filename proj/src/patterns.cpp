#include "wagon/patterns.hpp"

#include "wagon/errors.hpp"

#include <algorithm>

namespace wagon {

PatternId::PatternId(PatternKind k) : kind(k)
{
    if (k == PatternKind::Hole || k == PatternKind::Antihole)
        throw input_error("hole/antihole patterns need a cycle length; use PatternId::hole(k)");
    if (k == PatternKind::C5)
        cycle_length = 5;
}

PatternId PatternId::hole(int k)
{
    if (k < 5)
        throw input_error("holes have length at least 5");
    PatternId p;
    p.kind = PatternKind::Hole;
    p.cycle_length = k;
    return p;
}

PatternId PatternId::antihole(int k)
{
    if (k < 5)
        throw input_error("antiholes have length at least 5");
    PatternId p;
    p.kind = PatternKind::Antihole;
    p.cycle_length = k;
    return p;
}

int PatternId::vertex_count() const
{
    switch (kind) {
    case PatternKind::P2: return 2;
    case PatternKind::P3: return 3;
    case PatternKind::P4: return 4;
    case PatternKind::TwoK2: return 4;
    case PatternKind::P3uP2: return 5;
    case PatternKind::P4uP2: return 6;
    case PatternKind::Diamond: return 4;
    case PatternKind::C5: return 5;
    case PatternKind::Hole:
    case PatternKind::Antihole: return cycle_length;
    }
    return 0;
}

std::vector<Edge> PatternId::canonical_edges() const
{
    auto path = [](int first, int len) {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < len; ++i)
            e.emplace_back(first + i, first + i + 1);
        return e;
    };
    switch (kind) {
    case PatternKind::P2: return {{0, 1}};
    case PatternKind::P3: return path(0, 3);
    case PatternKind::P4: return path(0, 4);
    case PatternKind::TwoK2: return {{0, 1}, {2, 3}};
    case PatternKind::P3uP2: {
        auto e = path(0, 3);
        e.emplace_back(3, 4);
        return e;
    }
    case PatternKind::P4uP2: {
        auto e = path(0, 4);
        e.emplace_back(4, 5);
        return e;
    }
    case PatternKind::Diamond: return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    case PatternKind::C5:
    case PatternKind::Hole: {
        auto e = path(0, cycle_length);
        e.emplace_back(0, cycle_length - 1);
        return e;
    }
    case PatternKind::Antihole: {
        std::vector<Edge> e;
        for (int i = 0; i < cycle_length; ++i)
            for (int j = i + 1; j < cycle_length; ++j)
                if (j - i != 1 && !(i == 0 && j == cycle_length - 1))
                    e.emplace_back(i, j);
        return e;
    }
    }
    return {};
}

std::string PatternId::name() const
{
    switch (kind) {
    case PatternKind::P2: return "P2";
    case PatternKind::P3: return "P3";
    case PatternKind::P4: return "P4";
    case PatternKind::TwoK2: return "2K2";
    case PatternKind::P3uP2: return "P3uP2";
    case PatternKind::P4uP2: return "P4uP2";
    case PatternKind::Diamond: return "diamond";
    case PatternKind::C5: return "C5";
    case PatternKind::Hole: return "hole(" + std::to_string(cycle_length) + ")";
    case PatternKind::Antihole: return "antihole(" + std::to_string(cycle_length) + ")";
    }
    return "?";
}

namespace {

using Tuple = std::vector<int>;
using Found = std::optional<Tuple>;

Found find_p2(const Graph& g)
{
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        int b = g.neighbours(a).find_first();
        if (b >= 0)
            return Tuple{a, b};
    }
    return std::nullopt;
}

Found find_p3(const Graph& g)
{
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b))
                continue;
            for (int c = 0; c < n; ++c)
                if (c != a && c != b && g.adjacent(b, c) && !g.adjacent(a, c))
                    return Tuple{a, b, c};
        }
    return std::nullopt;
}

Found find_p4(const Graph& g)
{
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b))
                continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || !g.adjacent(b, c) || g.adjacent(a, c))
                    continue;
                for (int d = 0; d < n; ++d)
                    if (d != a && d != b && d != c && g.adjacent(c, d) && !g.adjacent(a, d)
                        && !g.adjacent(b, d))
                        return Tuple{a, b, c, d};
            }
        }
    return std::nullopt;
}

Found find_2k2(const Graph& g)
{
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b))
                continue;
            // second edge entirely outside N[a] | N[b]
            Bitset rest(n);
            for (int v = 0; v < n; ++v)
                rest.set(v);
            rest.subtract(g.neighbours(a));
            rest.subtract(g.neighbours(b));
            rest.reset(a);
            rest.reset(b);
            for (int c = rest.find_first(); c >= 0; c = rest.find_next(c)) {
                Bitset ds = rest;
                ds &= g.neighbours(c);
                int d = ds.find_first();
                if (d >= 0)
                    return Tuple{a, b, c, d};
            }
        }
    return std::nullopt;
}

Found find_diamond(const Graph& g)
{
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b))
                continue;
            Bitset common = g.neighbours(a);
            common &= g.neighbours(b);
            for (int c = common.find_first(); c >= 0; c = common.find_next(c)) {
                Bitset ds = common;
                ds.subtract(g.neighbours(c));
                ds.reset(c);
                int d = ds.find_first();
                if (d >= 0)
                    return Tuple{a, b, c, d};
            }
        }
    return std::nullopt;
}

// disjoint union P_len + P2: path part first, then the far edge
Found find_path_plus_edge(const Graph& g, int len)
{
    int n = g.vertex_count();
    Tuple path(len);
    // iterates induced paths (a0, ..., a_{len-1}) in lexicographic order
    auto extend = [&](auto&& self, int depth, Bitset banned) -> Found {
        if (depth == len) {
            Bitset rest(n);
            for (int v = 0; v < n; ++v)
                rest.set(v);
            for (int u : path) {
                rest.subtract(g.neighbours(u));
                rest.reset(u);
            }
            for (int d = rest.find_first(); d >= 0; d = rest.find_next(d)) {
                Bitset es = rest;
                es &= g.neighbours(d);
                int e = es.find_first();
                if (e >= 0) {
                    Tuple out = path;
                    out.push_back(d);
                    out.push_back(e);
                    return out;
                }
            }
            return std::nullopt;
        }
        int prev = path[depth - 1];
        for (int v = 0; v < n; ++v) {
            if (banned.test(v) || !g.adjacent(prev, v))
                continue;
            path[depth] = v;
            Bitset next_banned = banned;
            next_banned |= g.neighbours(prev);
            next_banned.set(prev);
            next_banned.set(v);
            if (auto r = self(self, depth + 1, next_banned))
                return r;
        }
        return std::nullopt;
    };
    for (int a = 0; a < n; ++a) {
        path[0] = a;
        Bitset banned(n);
        banned.set(a);
        if (auto r = extend(extend, 1, banned))
            return r;
    }
    return std::nullopt;
}

// Least induced cycle (v0, ..., v_{k-1}) with v0 minimal; plain lexicographic
// DFS over induced paths, closing back to v0 at depth k-1.
Found find_hole_of_length(const Graph& g, int k)
{
    int n = g.vertex_count();
    if (k > n)
        return std::nullopt;
    Tuple path(k);
    // mid: vertices > v0, unused, and non-adjacent to path[1..depth-2];
    // adjacency to v0 is handled per position.
    auto extend = [&](auto&& self, int depth, const Bitset& mid) -> Found {
        int last = path[depth - 1];
        if (depth == k - 1) {
            Bitset cand = mid;
            cand &= g.neighbours(last);
            cand &= g.neighbours(path[0]);
            int v = cand.find_first();
            if (v >= 0) {
                path[depth] = v;
                return path;
            }
            return std::nullopt;
        }
        Bitset cand = mid;
        cand &= g.neighbours(last);
        cand.subtract(g.neighbours(path[0]));
        for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
            path[depth] = v;
            Bitset next_mid = mid;
            next_mid.subtract(g.neighbours(last));
            next_mid.reset(v);
            if (auto r = self(self, depth + 1, next_mid))
                return r;
        }
        return std::nullopt;
    };
    for (int a = 0; a + k <= n; ++a) {
        path[0] = a;
        Bitset gt(n);
        for (int v = a + 1; v < n; ++v)
            gt.set(v);
        Bitset first = gt;
        first &= g.neighbours(a);
        for (int b = first.find_first(); b >= 0; b = first.find_next(b)) {
            path[1] = b;
            Bitset mid = gt;
            mid.reset(b);
            if (auto r = extend(extend, 2, mid))
                return r;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> find_induced(const Graph& g, const PatternId& p)
{
    Found t;
    switch (p.kind) {
    case PatternKind::P2: t = find_p2(g); break;
    case PatternKind::P3: t = find_p3(g); break;
    case PatternKind::P4: t = find_p4(g); break;
    case PatternKind::TwoK2: t = find_2k2(g); break;
    case PatternKind::P3uP2: t = find_path_plus_edge(g, 3); break;
    case PatternKind::P4uP2: t = find_path_plus_edge(g, 4); break;
    case PatternKind::Diamond: t = find_diamond(g); break;
    case PatternKind::C5:
    case PatternKind::Hole: t = find_hole_of_length(g, p.cycle_length); break;
    case PatternKind::Antihole: t = find_hole_of_length(complement(g), p.cycle_length); break;
    }
    if (!t)
        return std::nullopt;
    return Witness{p, std::move(*t)};
}

bool witness_valid(const Graph& g, const Witness& w)
{
    int k = w.pattern.vertex_count();
    if (static_cast<int>(w.vertices.size()) != k)
        return false;
    for (int v : w.vertices)
        if (v < 0 || v >= g.vertex_count())
            return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (w.vertices[i] == w.vertices[j])
                return false;
    std::vector<Edge> expected = w.pattern.canonical_edges();
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool want = std::binary_search(expected.begin(), expected.end(), Edge{i, j});
            if (g.adjacent(w.vertices[i], w.vertices[j]) != want)
                return false;
        }
    return true;
}

std::string describe(const Graph& g, const Witness& w)
{
    std::string s = w.pattern.name() + " on (";
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i)
            s += ", ";
        s += g.display_name(w.vertices[i]);
    }
    s += ")";
    return s;
}

} // namespace wagon
