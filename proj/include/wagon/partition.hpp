#pragma once

#include "wagon/graph.hpp"
#include "wagon/recognition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wagon {

/// Clique-anchored vertex partition (A, all C_ij, all I_a).
///
/// A is a maximum clique whose given order names positions 1..omega. The
/// blocks C_ij (1 <= i < j <= omega) are carved out iteratively in
/// lexicographic (i,j) order: C_ij collects the still-unplaced vertices
/// non-adjacent to both position i and position j. Every remaining vertex
/// outside A misses exactly one position a and lands in I_a.
///
/// Consequences used everywhere downstream: the blocks and A partition the
/// vertex set, and every v in C_ij is adjacent to all positions k < j with
/// k != i (its anchor set).
struct WagonPartition {
    std::vector<int> clique;                  // vertex at position p is clique[p-1]
    std::vector<std::vector<int>> c_blocks;   // lexicographic (i,j) order
    std::vector<std::vector<int>> i_sets;     // I_a for a = 1..omega

    int omega() const { return static_cast<int>(clique.size()); }

    static int block_index(int i, int j, int omega);
    std::pair<int, int> block_pair(int index) const; // inverse of block_index

    const std::vector<int>& c(int i, int j) const;
    std::vector<int>& c(int i, int j);
    const std::vector<int>& i_set(int a) const { return i_sets[a - 1]; }

    bool c_empty(int i, int j) const { return c(i, j).empty(); }

    std::string to_text(const Graph& g) const;
};

/// Builds the partition over the given clique ordering. The clique must be
/// a maximum clique of g (checked; both conditions are input errors).
WagonPartition build_partition(const Graph& g, const std::vector<int>& ordered_clique);

struct PartitionViolation {
    std::string what;
    std::vector<int> vertices;
};

/// Structural re-validation: A is a maximum clique, the pieces are disjoint
/// and cover V, every C_ij member is non-adjacent to i and j and matches the
/// iterative placement rule, every I_a member misses exactly a.
std::optional<PartitionViolation> validate_partition(const Graph& g, const WagonPartition& p);

/// Machine-checked forms of the structural claims 1..12 the partition of a
/// class member satisfies. `applicable` mirrors each claim's hypothesis
/// (class, omega, emptiness/edge side conditions); `holds` is the checked
/// conclusion, with a violating vertex tuple when it fails.
///
/// For (P3+P2)-free members (claims 1-3 need nothing more):
///    1  every [C_ij] is P3-free, hence a disjoint union of cliques
///    2  every I_a is an independent set
///    3  omega([C_ij]) <= omega - (j-2)
/// Additionally for diamond-free members:
///    4  C5-free implies perfect (checked via the hole search when small)
///    5  C_ij is empty for j >= 4
///    6  I_a is empty when omega >= 3, independent when omega = 2
///    7  omega([C_12]) <= omega-1 when omega >= 3 and C_13 or C_23 nonempty
///    8  no edges [C_13, A-{2}] and none [C_23, A-{1}]
///    9  endpoints of a [C_23,C_13] edge are isolated in their blocks (omega >= 4)
///   10  a [C_23,C_13] edge forces both blocks independent (omega >= 4)
///   11  with [C_23,C_13] empty, a nonempty block forces the other
///       independent (omega >= 4)
///   12  a C_12 vertex has at most one neighbour in A
struct ClaimReport {
    int claim = 0;
    bool applicable = false;
    bool holds = false;
    std::optional<std::vector<int>> witness;
    std::string note;
};

struct ClaimsReport {
    std::optional<PartitionViolation> partition_violation;
    std::vector<ClaimReport> claims; // empty when the partition itself is invalid
};

/// Caller is expected to have verified membership of g in cls; reports,
/// never throws.
ClaimsReport check_claims(const Graph& g, const WagonPartition& p, GraphClass cls);

} // namespace wagon
