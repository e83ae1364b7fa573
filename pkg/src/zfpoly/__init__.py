"""Exact zero forcing polynomials, forts, and structural checks for small graphs."""

from .analysis import (
    all_min_sets_forcing,
    cycle_polynomial_class,
    extremal_coefficients,
    hall_monotonicity_holds,
    is_path_graph,
    path_bound_holds,
    recognizes_complete,
    recognizes_path,
    same_poly_threshold_family,
)
from .closed_forms import (
    binom,
    block_exclusion_sets,
    count_consecutive_selections,
    poly_complete,
    poly_cycle,
    poly_multipartite,
    poly_path,
    poly_threshold,
    poly_wheel,
    threshold_zfs_check,
)
from .forcing import (
    ForceRecord,
    chronological_forces,
    closure,
    closure_table,
    forcing_chains,
    is_zero_forcing_set,
)
from .forts import (
    FortFamily,
    enumerate_forts,
    fort_count_bound_holds,
    is_fort,
    min_fort_cover,
    small_fort_coefficient_bound,
)
from .graphs import (
    BlockPartition,
    Graph,
    GraphFormatError,
    SizeCapError,
    all_labeled_graphs,
    block_partition,
    cartesian_product,
    complete,
    complete_multipartite,
    connected_components,
    cycle,
    cycle_plus_chord,
    disjoint_union,
    empty,
    from_edge_list,
    from_edge_list_text,
    from_graph6,
    graph_from_edge_mask,
    has_hamiltonian_path,
    is_isomorphic,
    join,
    mask_of,
    path,
    star,
    threshold_from_string,
    to_graph6,
    vertices_of,
    wheel,
)
from .polynomial import (
    ZfPolynomial,
    count_zfs,
    enumeration_cap,
    induced_subgraph,
    multiply,
    zf_polynomial,
    zf_polynomial_by_components,
)

__version__ = "0.1.0"
