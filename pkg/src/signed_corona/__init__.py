"""Exact spectral and balance computations for signed graphs and corona products."""

from __future__ import annotations

from .balance import (
    EdgeClassCounts,
    EdgeStats,
    TriadCensus,
    Witness,
    edge_class_counts,
    literal_table_edge_stats,
    literal_table_triad_census,
    predicted_edge_stats,
    predicted_triad_census,
    total_triads,
    triad_census,
    unbalance_witness,
)
from .corona import CoronaLayout, CoronaSpec, assemble_adjacency, block_matrices, corona, generalized_corona
from .errors import (
    GraphFileError,
    InternalInconsistency,
    InvalidGraph,
    NonEvenPolynomial,
    NotBipartite,
    NotRegular,
    PartsUnequal,
    PreconditionUnbalancedInput,
    SignedCoronaError,
    SizeLimitExceeded,
)
from .graph import (
    BalanceResult,
    Degree,
    SignedGraph,
    adjacency,
    bipartition,
    canonical_marking,
    co_regularity,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    cycle_sign,
    degree_profile,
    empty_graph,
    is_balanced,
    laplacian,
    marking_of,
    net_regularity,
    path_graph,
    signless_laplacian,
    triad,
)
from .graphfile import format_graph, parse_graph, read_graph, write_graph
from .isomorphism import isomorphic_marked
from .matrix import char_poly, poly_matrix_det, ratfun_matrix_det, ratfun_solve
from .poly import Polynomial, even_part_substitute, poly_gcd, poly_lcm
from .ratfunc import RationalFunction, ratfun_eval_poly
from .spectral import (
    CoronalKind,
    Factor,
    FactoredPoly,
    bipartite_split,
    charpoly_bipartite_two_family,
    charpoly_generalized_corona,
    coronal,
    coronal_co_regular,
    coronal_net_regular,
    coronal_rank_one,
    coronal_solve,
    corona_poly,
    cospectral,
    direct_poly,
    edgeless_regular_bipartite_poly,
    edgeless_two_family_charpoly,
    equal_coronal_poly,
    g_determinant,
    kind_poly,
    laplacian_poly_bipartite_regular,
    laplacian_poly_generalized_corona,
    signless_laplacian_poly_generalized_corona,
    signless_poly_bipartite_regular,
    two_family_spec,
)

__all__ = [
    "BalanceResult",
    "CoronaLayout",
    "CoronaSpec",
    "CoronalKind",
    "Degree",
    "EdgeClassCounts",
    "EdgeStats",
    "Factor",
    "FactoredPoly",
    "GraphFileError",
    "InternalInconsistency",
    "InvalidGraph",
    "NonEvenPolynomial",
    "NotBipartite",
    "NotRegular",
    "PartsUnequal",
    "Polynomial",
    "PreconditionUnbalancedInput",
    "RationalFunction",
    "SignedCoronaError",
    "SignedGraph",
    "SizeLimitExceeded",
    "TriadCensus",
    "Witness",
    "adjacency",
    "assemble_adjacency",
    "bipartite_split",
    "bipartition",
    "block_matrices",
    "canonical_marking",
    "char_poly",
    "charpoly_bipartite_two_family",
    "charpoly_generalized_corona",
    "co_regularity",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "corona",
    "corona_poly",
    "coronal",
    "coronal_co_regular",
    "coronal_net_regular",
    "coronal_rank_one",
    "coronal_solve",
    "cospectral",
    "cycle_graph",
    "cycle_sign",
    "degree_profile",
    "direct_poly",
    "edge_class_counts",
    "edgeless_regular_bipartite_poly",
    "edgeless_two_family_charpoly",
    "empty_graph",
    "equal_coronal_poly",
    "even_part_substitute",
    "format_graph",
    "g_determinant",
    "generalized_corona",
    "is_balanced",
    "isomorphic_marked",
    "kind_poly",
    "laplacian",
    "laplacian_poly_bipartite_regular",
    "laplacian_poly_generalized_corona",
    "literal_table_edge_stats",
    "literal_table_triad_census",
    "marking_of",
    "net_regularity",
    "parse_graph",
    "path_graph",
    "poly_gcd",
    "poly_lcm",
    "poly_matrix_det",
    "predicted_edge_stats",
    "predicted_triad_census",
    "ratfun_eval_poly",
    "ratfun_matrix_det",
    "ratfun_solve",
    "read_graph",
    "signless_laplacian",
    "signless_laplacian_poly_generalized_corona",
    "signless_poly_bipartite_regular",
    "total_triads",
    "triad",
    "triad_census",
    "two_family_spec",
    "unbalance_witness",
    "write_graph",
]

__version__ = "0.1.0"
