"""Graph-class recognition, clique-anchored partitions and certified colourings.

The heavy lifting lives in the compiled ``wagon._core`` extension; this
package re-exports its public surface.
"""

from ._core import (
    BoundSpec,
    CapabilityError,
    ClaimReport,
    ClaimsReport,
    ClassMembershipReport,
    Colouring,
    ColouringCheck,
    ExactChromatic,
    FaultInjection,
    Graph,
    GraphClass,
    InputError,
    PartitionViolation,
    PatternId,
    PatternKind,
    PerfectnessMode,
    PerfectnessReport,
    SweepConfig,
    SweepFailure,
    SweepMode,
    SweepReport,
    TracedColouring,
    WagonPartition,
    Witness,
    bound_for_class,
    build_partition,
    canonical_code,
    check_claims,
    check_class,
    chromatic_number_exact,
    class_name,
    clique_number,
    colour_2k2_diamond,
    colour_cograph,
    colour_disjoint_cliques,
    colour_p3p2,
    colour_p3p2_diamond,
    colour_p4p2,
    complement,
    enumerate_graphs,
    fig5_blow_up,
    find_induced,
    fixture,
    fixture_names,
    generate_class_instances,
    induced_subgraph,
    is_perfect_small,
    max_clique_exact,
    multiply_vertex,
    parse_class,
    pattern,
    read_graph,
    run_suite,
    to_dot,
    validate_partition,
    verify_colouring,
    witness_valid,
    write_dimacs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
