#include "wagon/graph.hpp"

#include "wagon/errors.hpp"

#include <algorithm>

namespace wagon {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw input_error("vertex count must be non-negative");
    adj_.assign(n_, Bitset(n_));
}

Graph::Graph(int n, std::span<const Edge> edge_list, std::vector<std::string> labels) : Graph(n)
{
    for (auto [u, v] : edge_list)
        add_edge_internal(u, v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n_)
            throw input_error("label list must have one entry per vertex");
        labels_ = std::move(labels);
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edge_list)
    : Graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()))
{
}

void Graph::add_edge_internal(int u, int v)
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw input_error("edge endpoint out of range: (" + std::to_string(u) + ", "
            + std::to_string(v) + ") with n = " + std::to_string(n_));
    if (u == v)
        throw input_error("self-loop at vertex " + std::to_string(u));
    if (u > v)
        std::swap(u, v);
    if (adj_[u].test(v))
        return;
    adj_[u].set(v);
    adj_[v].set(u);
    edges_.emplace_back(u, v);
}

std::string Graph::display_name(int v) const
{
    return has_labels() ? labels_[v] : std::to_string(v);
}

Graph induced_subgraph(const Graph& g, std::span<const int> s)
{
    std::vector<int> keep(s.begin(), s.end());
    for (int v : keep)
        if (v < 0 || v >= g.vertex_count())
            throw input_error("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        new_id[keep[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            edges.emplace_back(new_id[u], new_id[v]);

    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : keep)
            labels.push_back(g.label(v));

    return Graph(static_cast<int>(keep.size()), edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, const Bitset& s)
{
    return induced_subgraph(g, std::span<const int>(s.to_vector()));
}

Graph complement(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(n, edges, g.labels());
}

Graph multiply_vertex(const Graph& g, int v, int k)
{
    int n = g.vertex_count();
    if (v < 0 || v >= n)
        throw input_error("multiply_vertex: vertex " + std::to_string(v) + " out of range");
    if (k < 1)
        throw input_error("multiply_vertex: multiplicity must be at least 1");

    std::vector<Edge> edges = g.edges();
    for (int c = 0; c < k - 1; ++c) {
        int copy = n + c;
        g.neighbours(v).for_each([&](int u) { edges.emplace_back(copy, u); });
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        for (int c = 0; c < k - 1; ++c)
            labels.push_back(g.label(v) + std::string(static_cast<std::size_t>(c) + 1, '\''));
    }

    return Graph(n + k - 1, edges, std::move(labels));
}

} // namespace wagon
