"""Exact search, recognition and construction of Laplacian eigenvectors with
entries in {-1, 1} (bivalent) or {-1, 0, 1} (trivalent)."""

from .graph import (
    BicyclicShape,
    ContractViolation,
    Family,
    FamilyClassification,
    Graph,
    GraphFormatError,
    bicyclic_shape,
    classify_family,
    cycle_graph,
    is_cactus,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    to_dot,
    to_edge_list,
    to_graph6,
)
from .valuation import (
    Certificate,
    LocalCheck,
    equal_links,
    format_valuation,
    hard_degree,
    parse_valuation,
    soft_nodes,
    trivalent_local_check,
    verify,
)
from .search import SearchBoundError, SearchResult, brute_force, csp_search, full_spectrum
from .solver import StructuralSolver
from .transform import (
    ComponentClass,
    Decomposition,
    add_equal_link,
    classify_component,
    decompose,
    describe,
    extend_soft,
    reassemble,
    remove_equal_link,
    union,
)
from .recognize import (
    FamilyReport,
    Finding,
    bicyclic_prediction,
    classify,
    recognize,
    recognize_bicyclic,
    recognize_cactus,
    recognize_tree,
    recognize_unicyclic,
)
from .generate import (
    GenSpec,
    gen_B1,
    gen_B3,
    gen_cactus,
    gen_compose,
    gen_counterexample,
    gen_cycle,
    gen_diamond,
    gen_p2_tree,
    gen_regular_bipartite,
    gen_soft_star,
    gen_star_tree,
)
from .matching import (
    HamiltonBoundError,
    MatchingPartition,
    achievable_c,
    cyclomatic_check,
    hamiltonian_cycle,
    is_hamiltonian,
    max_bipartite_matching,
    perfect_matching_partition,
)

__version__ = "0.1.0"
