"""Alcoved lattice polytopes: Ehrhart polynomials, h*-vectors, triangulations."""

from ._core import (
    AlcovedError,
    AlcovedPolytope,
    HypothesisViolated,
    TheoremViolation,
    alcove_triangulation,
    boundary_compatible_triangulation,
    count_dilate,
    count_interior_dilate,
    derive_seed,
    ehrhart_polynomial,
    f_vector,
    facet_distances,
    facets,
    from_json,
    gorenstein_index,
    h_vector,
    hstar,
    interior_lattice_points,
    is_reflexive,
    is_unimodal,
    lattice_points,
    main_theorem_hypothesis,
    make_box,
    make_hypersimplex,
    make_order_polytope,
    make_qd,
    make_scaled_chain_simplex,
    make_sharp_distance_example,
    max_facet_distance,
    random_alcoved,
    scan,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
