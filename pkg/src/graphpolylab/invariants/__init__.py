"""Registry mapping polynomial ids to compute functions and variable lists."""

from __future__ import annotations

from ..errors import DomainError
from .coloring import gen_chromatic_poly
from .covered import covered_components_poly, covered_components_poly_fast, xi_poly
from .domination import domination_poly
from .matching import matching_M, matching_g, matching_mu
from .sets import clique_poly, independence_poly, vertex_cover_poly
from .spectral import char_poly_adjacency, char_poly_laplacian
from .tutte import (
    chromatic_poly,
    euler_poly,
    flow_poly,
    partition_Z,
    reliability_poly,
    tutte_poly,
)

POLYNOMIALS = {
    "char_adj": (char_poly_adjacency, ("x",)),
    "char_lap": (char_poly_laplacian, ("x",)),
    "dom": (domination_poly, ("x",)),
    "match_mu": (matching_mu, ("x",)),
    "match_g": (matching_g, ("x",)),
    "match_M": (matching_M, ("w1", "w2")),
    "indep": (independence_poly, ("x",)),
    "vcover": (vertex_cover_poly, ("x",)),
    "clique": (clique_poly, ("x",)),
    "covered_C": (covered_components_poly_fast, ("x", "y", "z")),
    "xi_eq": (xi_poly, ("x", "y", "z")),
    "tutte": (tutte_poly, ("x", "y")),
    "partition_Z": (partition_Z, ("q", "w")),
    "chromatic": (chromatic_poly, ("x",)),
    "gen_chromatic": (gen_chromatic_poly, ("x", "y")),
    "euler": (euler_poly, ("x",)),
    "flow": (flow_poly, ("x",)),
    "reliability": (reliability_poly, ("p",)),
}


def polynomial_ids():
    return sorted(POLYNOMIALS)


def compute(polynomial_id, g):
    """Evaluate the named graph polynomial on g."""
    try:
        func, _ = POLYNOMIALS[polynomial_id]
    except KeyError:
        raise DomainError(
            f"unknown polynomial {polynomial_id!r}; known: {', '.join(polynomial_ids())}"
        ) from None
    return func(g)


def variables_of(polynomial_id):
    try:
        return POLYNOMIALS[polynomial_id][1]
    except KeyError:
        raise DomainError(f"unknown polynomial {polynomial_id!r}") from None
