"""Certifying digraph coloring via four-blocks cycle subdivisions.

Given a strongly connected digraph and block lengths (k1, k3), the pipeline
either produces a proper coloring with at most 36*(2k)*(4k+2) colors
(k = max(k1, k3); 6k in the Hamiltonian case) or an independently verified
subdivision of the oriented cycle C(k1,1,k3,1). Exhaustive desk-scale
searchers ground every certificate.
"""

from .digraph import (
    Coloring,
    DegeneracyOrder,
    Digraph,
    UGraph,
    degeneracy_order,
    format_digraph,
    greedy_color,
    is_proper,
    is_strongly_connected,
    parse_digraph,
    product_coloring,
    underlying_graph,
)
from .errors import (
    BudgetExceeded,
    InfeasibleSpec,
    NotAcyclic,
    NotFinalTree,
    NotStronglyConnected,
    ParseError,
    UnreachableVertex,
)
from .outtree import (
    ArcKind,
    OutTree,
    classify_arc,
    finalize,
    is_ancestor,
    is_final,
    lca,
    spanning_out_tree,
)
from .witness import (
    CyclePattern,
    SubdivisionWitness,
    TwoBlockPathWitness,
    VerifyResult,
    WheelWitness,
    default_budget,
    find_cycle_subdivision,
    find_k_wheel,
    find_two_block_path,
    verify_subdivision,
    verify_two_block_path,
    verify_wheel,
    witness_from_json,
    witness_to_json,
)
from .decomposition import (
    ArcPartition,
    ClassReport,
    ColoringWithinBound,
    Inconclusive,
    LevelClasses,
    OutDegreeFailure,
    SubDigraph,
    SubdivisionFound,
    WheelCoreFailure,
    arc_partition,
    color_d1,
    color_d2,
    color_d3,
    color_strong_digraph,
    induced_subdigraph,
    level_classes,
)
from .hamiltonian import (
    ChordViolation,
    HamiltonianCycle,
    PeelColoring,
    PeelStall,
    check_chord_neighbor_bound,
    color_hamiltonian,
    find_hamiltonian_cycle,
    violations_to_json,
)
from .generators import Family, GenSpec, Rng, generate

__version__ = "0.1.0"
