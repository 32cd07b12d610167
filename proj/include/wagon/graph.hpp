#pragma once

#include "wagon/bitset.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wagon {

using Edge = std::pair<int, int>;

/// Simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Adjacency is symmetric and irreflexive. Values are immutable after
/// construction, so they are safe for concurrent reads. Adjacency is kept
/// both as bitset rows (pattern and clique search) and as a sorted edge
/// list (I/O); both are cheap at the scales this toolkit targets.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Graph from an edge list. Duplicate edges and either endpoint order
    /// are accepted; self-loops and out-of-range endpoints are input errors.
    /// labels, when given, must have exactly n entries.
    Graph(int n, std::span<const Edge> edge_list, std::vector<std::string> labels = {});
    Graph(int n, std::initializer_list<Edge> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset& neighbours(int v) const { return adj_[v]; }

    /// Edges with u < v, lexicographically sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Label when present, otherwise the decimal vertex id.
    std::string display_name(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void add_edge_internal(int u, int v);

    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Subgraph induced by the vertex set s, relabelled densely so that result
/// vertex i corresponds to the i-th smallest member of s. Labels carry over.
Graph induced_subgraph(const Graph& g, std::span<const int> s);
Graph induced_subgraph(const Graph& g, const Bitset& s);

/// Complement on the same vertex set: u~v iff u != v and not u~v in g.
Graph complement(const Graph& g);

/// Replace v by an independent set of k vertices sharing v's former
/// neighbourhood. Original ids are preserved; the k-1 copies are appended
/// at the end. k = 1 returns a copy of g.
Graph multiply_vertex(const Graph& g, int v, int k);

} // namespace wagon
