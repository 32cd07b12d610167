#pragma once

// Test-side oracles, deliberately independent of the library's search paths:
// plain subset/permutation enumeration and unpruned backtracking.

#include "wagon/graph.hpp"
#include "wagon/patterns.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace wagon::testing {

inline bool tuple_induces(const Graph& g, const PatternId& p, const std::vector<int>& tuple)
{
    auto expected = p.canonical_edges();
    std::sort(expected.begin(), expected.end());
    int k = p.vertex_count();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool want = std::binary_search(expected.begin(), expected.end(), Edge{i, j});
            if (g.adjacent(tuple[i], tuple[j]) != want)
                return false;
        }
    return true;
}

/// Every k-subset in every order.
inline bool naive_contains_induced(const Graph& g, const PatternId& p)
{
    int k = p.vertex_count();
    int n = g.vertex_count();
    if (k > n)
        return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::vector<int> tuple = idx;
        do {
            if (tuple_induces(g, p, tuple))
                return true;
        } while (std::next_permutation(tuple.begin(), tuple.end()));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return false;
}

/// Unpruned backtracking k-colourability.
inline bool naive_colourable(const Graph& g, int k)
{
    int n = g.vertex_count();
    std::vector<int> col(n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n)
            return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) && col[u] == c)
                    ok = false;
            if (ok) {
                col[v] = c;
                if (self(self, v + 1))
                    return true;
                col[v] = 0;
            }
        }
        return false;
    };
    return rec(rec, 0);
}

inline int naive_chromatic(const Graph& g)
{
    if (g.vertex_count() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (naive_colourable(g, k))
            return k;
}

/// All vertex subsets (n <= ~16).
inline int naive_clique_number(const Graph& g)
{
    int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                vs.push_back(v);
        bool clique = true;
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size() && clique; ++b)
                if (!g.adjacent(vs[a], vs[b]))
                    clique = false;
        if (clique)
            best = std::max(best, static_cast<int>(vs.size()));
    }
    return best;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() & 0xFFFF) < p * 65536.0)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Random cotree: P4-free by construction.
inline Graph random_cograph(int n, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo <= 1)
            return;
        int split = lo + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo - 1));
        bool join = rng() & 1;
        self(self, lo, split);
        self(self, split, hi);
        if (join)
            for (int u = lo; u < split; ++u)
                for (int v = split; v < hi; ++v)
                    edges.emplace_back(u, v);
    };
    rec(rec, 0, n);
    return Graph(n, edges);
}

inline Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(a.vertex_count() + u, a.vertex_count() + v);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

/// K_w plus attached vertices; attachments[i] lists clique neighbours of
/// vertex w+i, extra edges are offsets among the attached vertices.
inline Graph clique_plus(int w, const std::vector<std::vector<int>>& attachments,
    const std::vector<Edge>& extra = {})
{
    std::vector<Edge> edges;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v)
            edges.emplace_back(u, v);
    for (std::size_t i = 0; i < attachments.size(); ++i)
        for (int a : attachments[i])
            edges.emplace_back(w + static_cast<int>(i), a);
    for (auto [x, y] : extra)
        edges.emplace_back(w + x, w + y);
    return Graph(w + static_cast<int>(attachments.size()), edges);
}

} // namespace wagon::testing
