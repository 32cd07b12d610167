#pragma once

#include "wagon/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wagon {

enum class PatternKind {
    P2,       // one edge
    P3,       // path on 3 vertices
    P4,       // path on 4 vertices
    TwoK2,    // two disjoint edges, no edges between
    P3uP2,    // disjoint union of P3 and P2
    P4uP2,    // disjoint union of P4 and P2
    Diamond,  // K4 minus one edge
    C5,       // chordless 5-cycle
    Hole,     // chordless cycle of length k >= 5
    Antihole, // complement of a hole of length k >= 5
};

/// A fixed forbidden pattern. Hole/Antihole carry the cycle length k >= 5;
/// the other kinds carry no parameter.
struct PatternId {
    PatternKind kind = PatternKind::P2;
    int cycle_length = 0;

    PatternId() = default;
    PatternId(PatternKind k); // non-parameterised kinds only
    static PatternId hole(int k);
    static PatternId antihole(int k);

    int vertex_count() const;

    /// Edge set of the pattern under its canonical vertex order 0..size-1:
    /// paths are 0-1-...-k, cycles 0-1-...-k-0, TwoK2 is {01, 23}, unions
    /// list the larger part first, and the diamond is {01,02,03,12,13}
    /// (0 and 1 are the two degree-3 vertices).
    std::vector<Edge> canonical_edges() const;

    std::string name() const;

    bool operator==(const PatternId&) const = default;
};

/// A concrete occurrence: the vertex tuple, in the pattern's canonical
/// order, inducing exactly the pattern's edge set in the host graph.
struct Witness {
    PatternId pattern;
    std::vector<int> vertices;
};

/// Least (in tuple lexicographic order) induced occurrence of p in g, or
/// absent. Hole/Antihole requests longer than the graph are trivially absent.
std::optional<Witness> find_induced(const Graph& g, const PatternId& p);

/// Re-checks a witness against g: distinct in-range vertices whose induced
/// edge set equals the pattern's canonical edge set.
bool witness_valid(const Graph& g, const Witness& w);

std::string describe(const Graph& g, const Witness& w);

} // namespace wagon
