"""Token graph construction and Laplacian spectra.

The heavy lifting lives in the compiled ``_core`` module; this package just
re-exports it. Report-producing functions return plain dicts with the same
schema as the ``tokenspectra`` command-line tool's JSON output.
"""

from ._core import (
    BinomialMatrix,
    Graph,
    SubsetIndex,
    TokenGraph,
    algebraic_connectivity,
    binom,
    check_conjecture,
    check_containment,
    check_degree_bounds,
    check_pairing,
    collapse_edge,
    complement,
    complete_multipartite,
    delete_vertex,
    emit_graph6,
    extend_embedding,
    family,
    family_names,
    fiedler_vector,
    find_graph_by_spectra,
    johnson_spectrum,
    labeled_graph,
    labeled_graph_count,
    labeled_tree,
    labeled_tree_count,
    laplacian_spectrum,
    level_partition,
    lift_eigenvector,
    parse_graph6,
    project_eigenvector,
    rayleigh_quotient,
    read_graph6_file,
    sample_graph,
    spectral_radius,
    token_graph,
    token_kernel_eigenpairs,
    transfer_applies,
    transfer_threshold,
)

__version__ = "1.0.0"

__all__ = [
    "BinomialMatrix",
    "Graph",
    "SubsetIndex",
    "TokenGraph",
    "algebraic_connectivity",
    "binom",
    "check_conjecture",
    "check_containment",
    "check_degree_bounds",
    "check_pairing",
    "collapse_edge",
    "complement",
    "complete_multipartite",
    "delete_vertex",
    "emit_graph6",
    "extend_embedding",
    "family",
    "family_names",
    "fiedler_vector",
    "find_graph_by_spectra",
    "johnson_spectrum",
    "labeled_graph",
    "labeled_graph_count",
    "labeled_tree",
    "labeled_tree_count",
    "laplacian_spectrum",
    "level_partition",
    "lift_eigenvector",
    "parse_graph6",
    "project_eigenvector",
    "rayleigh_quotient",
    "read_graph6_file",
    "sample_graph",
    "spectral_radius",
    "token_graph",
    "token_kernel_eigenpairs",
    "transfer_applies",
    "transfer_threshold",
]
