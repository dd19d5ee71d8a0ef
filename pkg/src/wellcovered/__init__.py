"""Exact tools for well-covered graphs.

Core objects: exact graphs over vertices 1..n, enumeration of maximal
independent sets, weight functions making every maximal independent set
weigh the same, relating edges and generating subgraphs with their
witnesses, and CNF rewrites showing the witness questions are as hard
as satisfiability.
"""

from .cnf import (
    Assignment,
    Clause,
    CnfFormatError,
    CnfInstance,
    DsatViolation,
    evaluate,
    has_bad_pair,
    parse_dimacs,
    serialize_dimacs,
    solve,
    validate_dsat,
    validate_usat,
)
from .graphs import (
    Graph,
    GraphFormatError,
    VertexSet,
    contains_cycle_k,
    distance,
    distance_map,
    is_bipartite,
    is_independent,
    is_k1t_free,
    is_maximal_independent,
    parse_graph,
    serialize_graph,
)
from .independent_sets import (
    Budget,
    BudgetExceededError,
    WeightFunction,
    enumerate_maximal_is,
    extend_greedy,
    is_w_well_covered,
    is_well_covered,
    parse_weight_function,
    serialize_weight_function,
    set_weight,
)
from .named import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from .reductions import (
    GsInstance,
    ReInstance,
    assignment_to_witness,
    dsat_to_gs,
    parse_sidecar,
    sat_to_usat,
    serialize_sidecar,
    threesat_to_dsat,
    usat_to_re,
    witness_to_assignment,
)
from .wcw import (
    WeightSpace,
    contains_all_ones,
    enumerate_generating_subgraphs,
    functional_vanishes,
    local_space,
    nullspace,
    serialize_weight_space,
    wcw_basis_definitional,
    wcw_basis_generating,
    wcw_basis_local,
)
from .witness import (
    Bipartition,
    BoundarySets,
    boundary_sets,
    check_witness,
    is_generating,
    is_generating_oracle,
    is_relating,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "Bipartition",
    "BoundarySets",
    "Budget",
    "BudgetExceededError",
    "Clause",
    "CnfFormatError",
    "CnfInstance",
    "DsatViolation",
    "Graph",
    "GraphFormatError",
    "GsInstance",
    "ReInstance",
    "VertexSet",
    "WeightFunction",
    "WeightSpace",
    "assignment_to_witness",
    "boundary_sets",
    "check_witness",
    "complete_bipartite_graph",
    "complete_graph",
    "contains_all_ones",
    "contains_cycle_k",
    "cycle_graph",
    "distance",
    "distance_map",
    "dsat_to_gs",
    "enumerate_generating_subgraphs",
    "enumerate_maximal_is",
    "evaluate",
    "extend_greedy",
    "functional_vanishes",
    "has_bad_pair",
    "is_bipartite",
    "is_generating",
    "is_generating_oracle",
    "is_independent",
    "is_k1t_free",
    "is_maximal_independent",
    "is_relating",
    "is_w_well_covered",
    "is_well_covered",
    "local_space",
    "nullspace",
    "parse_dimacs",
    "parse_graph",
    "parse_sidecar",
    "parse_weight_function",
    "path_graph",
    "sat_to_usat",
    "serialize_dimacs",
    "serialize_graph",
    "serialize_sidecar",
    "serialize_weight_function",
    "serialize_weight_space",
    "solve",
    "star_graph",
    "threesat_to_dsat",
    "usat_to_re",
    "validate_dsat",
    "validate_usat",
    "wcw_basis_definitional",
    "wcw_basis_generating",
    "wcw_basis_local",
    "witness_to_assignment",
]
