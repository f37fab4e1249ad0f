"""Clique complexes of multichain graphs and the relations that define them."""
from .kernels import BACKEND
from .poset import (
    CycleError,
    Poset,
    PosetError,
    all_chains,
    format_poset,
    longest_chain_length,
    maximal_chains,
    order_complex,
    parse_poset,
    poset_from_cover_relations,
    read_poset,
)
from .relations import (
    AxiomReport,
    IndexMap,
    OracleSizeError,
    Relation,
    all_index_maps,
    block_partial_sums,
    dual_map,
    enumerate_multichains,
    enumerate_script_I,
    interleaved_sequence,
    is_multichain,
    is_partial_order_map,
    is_reflexive_map,
    is_transitive_map,
    multichain_label,
    oracle_check_axioms,
    parse_kappa,
    parse_multichain,
    rel_general,
    rel_leq,
    rel_leq_interleaved,
    rel_leq_prime,
    rel_muhle,
    zigzag_map,
)
from .complexes import (
    ComplexSizeError,
    MultichainGraph,
    SimplicialComplex,
    clique_complex,
    count_distinct_graphs,
    edge_in_all_graphs,
    edgewise_subdivision,
    maximal_cliques,
    multichain_complex,
    multichain_graph,
    same_up_to_relabeling,
)
from .homology import (
    HomologyResult,
    IntegerMatrix,
    boundary_matrices,
    is_homology_ball,
    is_homology_point,
    rational_rank,
    reduced_homology,
    smith_normal_form,
)
from .geometry import (
    BarycentricPoint,
    Certificate,
    dichotomy_report,
    image_point,
    preimage,
    random_interior_point,
    simplex_volume,
    subdivision_certificate,
    tableau_is_valid,
    vertex_placement,
)
from .homotopy import (
    ClosureReport,
    FiniteOrder,
    check_closure,
    closure_cl,
    closure_image_isomorphism,
    compress,
    expand,
    fiber_complex,
    muhle_closure,
    muhle_order,
    prime_order,
    q_zero_order,
    support_map_g,
)

__version__ = "0.1.0"
