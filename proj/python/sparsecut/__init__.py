"""Vertex connectivity, minimum vertex cuts and sparse-graph witness search.

Vertex ids are 0-based. Reports are plain dicts with the same layout as the
command-line tool's JSON output.
"""

from ._core import (
    Graph,
    SparsecutError,
    canonical_form,
    classify_cut,
    count_census,
    cut_component_matching,
    disjoint_paths,
    enumerate_minimum_cuts,
    evaluate_sharp_frontier,
    evaluate_sharpness,
    foresty_min_cut_4regular,
    foresty_min_cut_sparse,
    gen_family,
    independent_min_cut_cubic,
    independent_min_cut_sparse,
    is_connected,
    isomorphic,
    oracle_min_cut_with_property,
    verify_lemma,
    verify_sharpness,
    verify_theorem,
    vertex_connectivity,
)

__all__ = [
    "Graph",
    "SparsecutError",
    "canonical_form",
    "classify_cut",
    "count_census",
    "cut_component_matching",
    "disjoint_paths",
    "enumerate_minimum_cuts",
    "evaluate_sharp_frontier",
    "evaluate_sharpness",
    "foresty_min_cut_4regular",
    "foresty_min_cut_sparse",
    "gen_family",
    "independent_min_cut_cubic",
    "independent_min_cut_sparse",
    "is_connected",
    "isomorphic",
    "oracle_min_cut_with_property",
    "verify_lemma",
    "verify_sharpness",
    "verify_theorem",
    "vertex_connectivity",
]
