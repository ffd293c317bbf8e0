"""Matching covered and factor-critical graphs: predicates, ear
decompositions, spectral radii and exhaustive extremal checks."""

from .graph import (
    Bipartition,
    Graph,
    Graph6Error,
    GraphError,
    bipartition,
    blocks,
    canonical_form,
    complete_bipartite_graph,
    complete_graph,
    cut_vertices,
    cycle_graph,
    is_connected,
    parse_graph6,
    path_graph,
    permute,
    to_graph6,
    with_edges,
    without_edges,
    without_vertices,
)
from .matching import (
    Certificate,
    allowed_edges,
    has_perfect_matching,
    is_factor_critical,
    is_matching_covered,
    is_minimal_factor_critical,
    is_minimal_matching_covered,
    maximum_matching,
)
from .nicecycle import Cycle, chords, enumerate_cycles, is_nice, minimality_via_nice_cycles
from .ears import (
    Ear,
    EarDecomposition,
    EarError,
    ExchangeError,
    ParallelFamily,
    add_ear,
    compatible,
    ear_grades,
    edge_exchange,
    find_bipartite_ear_decomposition,
    find_odd_ear_decomposition,
    parallel_families,
    validate,
)
from .spectral import (
    SpectralResult,
    automorphism_orbits,
    dominance_check,
    rho_friendship,
    rho_p3star,
    spectral_radius,
)
from .extremal import (
    EnumerationReport,
    brute_minimal_factor_critical,
    brute_minimal_mc_bipartite,
    enumerate_minimal_factor_critical,
    enumerate_minimal_mc_bipartite,
    gen_friendship,
    gen_p3star,
    verify_theorem_1,
    verify_theorem_2,
)

__all__ = [
    "Bipartition",
    "Graph",
    "Graph6Error",
    "GraphError",
    "bipartition",
    "blocks",
    "canonical_form",
    "complete_bipartite_graph",
    "complete_graph",
    "cut_vertices",
    "cycle_graph",
    "is_connected",
    "parse_graph6",
    "path_graph",
    "permute",
    "to_graph6",
    "with_edges",
    "without_edges",
    "without_vertices",
    "Certificate",
    "allowed_edges",
    "has_perfect_matching",
    "is_factor_critical",
    "is_matching_covered",
    "is_minimal_factor_critical",
    "is_minimal_matching_covered",
    "maximum_matching",
    "Ear",
    "EarDecomposition",
    "EarError",
    "ExchangeError",
    "ParallelFamily",
    "add_ear",
    "compatible",
    "ear_grades",
    "edge_exchange",
    "find_bipartite_ear_decomposition",
    "find_odd_ear_decomposition",
    "parallel_families",
    "validate",
    "SpectralResult",
    "automorphism_orbits",
    "dominance_check",
    "rho_friendship",
    "rho_p3star",
    "spectral_radius",
    "EnumerationReport",
    "brute_minimal_factor_critical",
    "brute_minimal_mc_bipartite",
    "enumerate_minimal_factor_critical",
    "enumerate_minimal_mc_bipartite",
    "gen_friendship",
    "gen_p3star",
    "verify_theorem_1",
    "verify_theorem_2",
    "Cycle",
    "chords",
    "enumerate_cycles",
    "is_nice",
    "minimality_via_nice_cycles",
]

__version__ = "0.1.0"
