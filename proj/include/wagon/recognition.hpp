#pragma once

#include "wagon/errors.hpp"
#include "wagon/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wagon {

/// Hereditary classes defined by short lists of forbidden induced subgraphs.
enum class GraphClass {
    P3P2Free,          // no induced P3 u P2
    P4P2Free,          // no induced P4 u P2
    TwoK2Free,         // no induced 2K2
    P3P2DiamondFree,   // no induced P3 u P2, no induced diamond
    TwoK2DiamondFree,  // no induced 2K2, no induced diamond
};

std::vector<PatternId> forbidden_patterns(GraphClass c);

std::string class_name(GraphClass c);
std::optional<GraphClass> parse_class(const std::string& name);

/// True when membership in c forces (P3 u P2)-freeness. 2K2-free graphs
/// qualify: an induced P3 u P2 would contain an induced 2K2.
bool implies_p3p2_free(GraphClass c);

/// True when the class forbids the diamond.
bool forbids_diamond(GraphClass c);

struct ClassMembershipReport {
    GraphClass cls;
    bool member = false;
    std::optional<Witness> witness; // present exactly when member is false
};

/// Membership with certificate: the witness is the first forbidden pattern
/// found, in the class's documented pattern order.
ClassMembershipReport check_class(const Graph& g, GraphClass c);

/// Raised by operations whose precondition is membership in a class; carries
/// the offending induced pattern.
struct class_error : input_error {
    Witness witness;
    class_error(const std::string& msg, Witness w) : input_error(msg), witness(std::move(w)) {}
};

/// Throws class_error unless g belongs to c.
void require_class(const Graph& g, GraphClass c, const std::string& caller);

enum class PerfectnessMode {
    SubgraphSweep, // chi(H) == omega(H) for every induced subgraph; n <= 12
    HoleSearch,    // no odd hole in g or in its complement; n <= 64
};

inline constexpr int kSubgraphSweepLimit = 12;
inline constexpr int kHoleSearchLimit = 64;

struct PerfectnessReport {
    bool perfect = false;
    /// Offending odd hole/antihole; only HoleSearch produces one.
    std::optional<Witness> witness;
};

/// Desk-scale perfectness check. The two modes are computed by independent
/// routes and agree wherever both apply; limits are enforced with a
/// capability error naming the bound.
PerfectnessReport is_perfect_small(const Graph& g, PerfectnessMode mode);

} // namespace wagon
