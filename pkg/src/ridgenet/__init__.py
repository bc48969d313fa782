"""Exact ridge unfoldings and nets of simplices and orthoplexes.

Chains and trees of (n-1)-simplex facets are developed into the hyperplane
sum(x) = 1 with exact rational reflection matrices; overlap is decided by a
rational LP, censuses are reduced by explicit symmetry groups, and every
published count and counterexample is reproduced mechanically.
"""

from .exact import (
    DimensionError,
    RatMatrix,
    RatPoly,
    Rational,
    mat_mul,
    poly_eval,
    poly_interpolate,
    rational_str,
)
from .geometry import (
    FacetPlacement,
    OverlapKind,
    OverlapVerdict,
    Unfolding,
    centroid_thresholds,
    classify_overlap,
    common_interior_point,
    embed_chain,
    embed_tree,
    interiors_overlap,
    is_net,
    orthoplex_tree_unfolding,
    reflection_matrix,
    simplex_tree_unfolding,
)
from .lists import (
    CubePath,
    InvalidListError,
    UnfoldList,
    canonicalize_list,
    enumerate_valid_lists,
    is_valid_list,
    list_to_path,
    make_list,
    shortest_even_window,
)
from .skeleton import (
    ResourceLimitError,
    SkeletonGraph,
    complete_graph,
    count_spanning_paths_up_to_symmetry,
    count_spanning_trees_up_to_symmetry,
    cross_polytope_graph,
    cube_graph,
    kirchhoff_count,
    maximal_extensions,
    min_maximal_path_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "CubePath",
    "DimensionError",
    "FacetPlacement",
    "InvalidListError",
    "OverlapKind",
    "OverlapVerdict",
    "RatMatrix",
    "RatPoly",
    "Rational",
    "ResourceLimitError",
    "SkeletonGraph",
    "UnfoldList",
    "Unfolding",
    "canonicalize_list",
    "centroid_thresholds",
    "classify_overlap",
    "common_interior_point",
    "complete_graph",
    "count_spanning_paths_up_to_symmetry",
    "count_spanning_trees_up_to_symmetry",
    "cross_polytope_graph",
    "cube_graph",
    "embed_chain",
    "embed_tree",
    "enumerate_valid_lists",
    "interiors_overlap",
    "is_net",
    "is_valid_list",
    "kirchhoff_count",
    "list_to_path",
    "make_list",
    "mat_mul",
    "maximal_extensions",
    "min_maximal_path_vertices",
    "orthoplex_tree_unfolding",
    "poly_eval",
    "poly_interpolate",
    "rational_str",
    "reflection_matrix",
    "shortest_even_window",
    "simplex_tree_unfolding",
]
