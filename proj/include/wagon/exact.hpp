#pragma once

#include "wagon/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wagon {

/// chromatic_number_exact refuses graphs beyond this many vertices.
inline constexpr int kExactChromaticLimit = 30;

/// Clique number via branch and bound (greedy-colouring upper bound on the
/// candidate set). Intended for desk scale, n up to a few hundred.
int clique_number(const Graph& g);

/// True when g restricted to cand contains a clique of size >= k.
bool has_clique_of_size(const Graph& g, const Bitset& cand, int k);

/// A maximum clique, as the lexicographically least vertex set realising
/// the clique number, in ascending id order. Empty graph gives an empty list.
std::vector<int> max_clique_exact(const Graph& g);

/// Vertex colouring: assignment[v] is a colour index >= 1 for every vertex,
/// colours_used the number of distinct indices. Properness is checked by
/// verify_colouring, never assumed.
struct Colouring {
    std::vector<int> assignment;
    int colours_used = 0;

    /// Recomputes colours_used from the assignment.
    void finalize();
};

struct ColouringCheck {
    bool proper = false;
    std::optional<Edge> offending_edge; // least monochromatic edge when improper
};

/// Checks properness. The assignment must be total (one colour >= 1 per
/// vertex); anything else is an input error.
ColouringCheck verify_colouring(const Graph& g, const Colouring& col);

struct ExactChromatic {
    int chi = 0;
    Colouring colouring;
};

/// Exact chromatic number via branch and bound over colour classes, seeded
/// with a clique lower bound and a DSATUR upper bound. Throws
/// capability_error above kExactChromaticLimit vertices.
ExactChromatic chromatic_number_exact(const Graph& g);

/// DSATUR greedy colouring; proper but not necessarily optimal.
Colouring dsatur_colouring(const Graph& g);

} // namespace wagon
