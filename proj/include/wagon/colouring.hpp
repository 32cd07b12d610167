#pragma once

#include "wagon/exact.hpp"
#include "wagon/partition.hpp"
#include "wagon/recognition.hpp"

#include <string>

namespace wagon {

/// Chromatic bound certified for a (class, omega) pair. `perfect` marks the
/// regimes where the class is perfect, in which case the bound is omega
/// itself.
struct BoundSpec {
    GraphClass cls;
    int omega = 0;
    int bound = 0;
    bool perfect = false;
};

/// Bound table:
///   p3p2 / p4p2 / 2k2    omega(omega+1)(omega+2)/6
///   p3p2diamond          omega+2 (w=2), omega+3 (w=3), omega+1 (w=4),
///                        omega for w >= 5 (perfect)
///   2k2diamond           omega+1 (w=2), omega for w >= 3 (perfect from w=4)
/// omega = 1 gives bound 1 for every class.
BoundSpec bound_for_class(GraphClass c, int omega);

/// Optimal colouring of a P3-free graph (a disjoint union of cliques):
/// largest component size many colours. Non-P3-free input is a class error
/// carrying the induced P3.
Colouring colour_disjoint_cliques(const Graph& h);

/// Optimal colouring of a P4-free graph by cotree recursion: components
/// share a palette, join factors get disjoint palettes. Non-cograph input
/// is a class error carrying the induced P4.
Colouring colour_cograph(const Graph& h);

/// Colours a (P3 u P2)-free graph within omega(omega+1)(omega+2)/6 colours:
/// clique positions get colours 1..omega, every block C_ij a fresh palette
/// of exactly omega([C_ij]) colours, and I_a inherits a's colour.
Colouring colour_p3p2(const Graph& g);

/// Same scheme for (P4 u P2)-free graphs with the cograph colourer on each
/// block; same bound.
Colouring colour_p4p2(const Graph& g);

struct TracedColouring {
    Colouring colouring;
    std::string case_trace;
};

/// Case-split colouring of a (P3 u P2, diamond)-free graph with omega >= 2,
/// within the p3p2diamond bound. The trace records the branch taken (omega,
/// block emptiness, cross edges, component shape) using the stable tokens
/// "case 1", "subcase 2.1", "case 2.2.a (K1)", "case 2.2.a (K2/K3)",
/// "case 2.2.b" and "perfect". Perfect regimes fall back to the exact
/// oracle, which certifies an omega-colouring at desk scale.
TracedColouring colour_p3p2_diamond(const Graph& g);

/// Colouring of a (2K2, diamond)-free graph with omega >= 2: three colours
/// at omega = 2 (the third only when C_12 is nonempty), exactly omega
/// colours for omega >= 3, certifying chi = omega constructively.
TracedColouring colour_2k2_diamond(const Graph& g);

} // namespace wagon
